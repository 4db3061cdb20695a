#include "scx/io.hpp"

#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace scx {

namespace {

using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

Json parse(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

const Json& field(const Json& obj, const char* name) {
  if (!obj.is_object()) throw ParseError("expected a JSON object");
  auto it = obj.find(name);
  if (it == obj.end()) throw ParseError(std::string("missing required field '") + name + "'");
  return *it;
}

std::uint64_t as_index(const Json& v, const char* what) {
  if (!v.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  const auto s = v.get<std::int64_t>();
  if (s < 0) throw ParseError(std::string(what) + " out of range: negative");
  return static_cast<std::uint64_t>(s);
}

State as_state(const Json& v, const char* what) {
  const std::uint64_t x = as_index(v, what);
  if (x >= std::numeric_limits<State>::max()) throw InvalidDfa(std::string(what) + " out of range");
  return static_cast<State>(x);
}

const Json& array_field(const Json& obj, const char* name) {
  const Json& v = field(obj, name);
  if (!v.is_array()) throw ParseError(std::string("field '") + name + "' must be an array");
  return v;
}

std::vector<bool> bools(const Json& arr, const char* name) {
  std::vector<bool> out;
  for (const Json& b : arr) {
    if (!b.is_boolean()) throw ParseError(std::string("field '") + name + "' must hold booleans");
    out.push_back(b.get<bool>());
  }
  return out;
}

void append_array(std::string& out, std::span<const State> values) {
  out += '[';
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(values[i]);
  }
  out += ']';
}

std::string format_ms(const VerificationReport& r, bool timing) {
  if (!timing) return "0";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", r.elapsed.count());
  return buf;
}

}  // namespace

std::string dfa_to_json(const Dfa& d, std::span<const PairState> pair_states) {
  std::string out = "{\n";
  out += "  \"alphabet_size\": " + std::to_string(d.alphabet_size()) + ",\n";
  out += "  \"num_states\": " + std::to_string(d.num_states()) + ",\n";
  out += "  \"start\": " + std::to_string(d.start()) + ",\n";
  out += "  \"finals\": ";
  const auto finals = d.finals();
  append_array(out, finals);
  out += ",\n  \"delta\": [";
  for (State q = 0; q < d.num_states(); ++q) {
    out += q == 0 ? "\n    " : ",\n    ";
    append_array(out, d.row(q));
  }
  out += "\n  ]";
  if (!d.labels().empty()) {
    out += ",\n  \"labels\": " + Json(d.labels()).dump();
  }
  if (!pair_states.empty()) {
    out += ",\n  \"pair_states\": [";
    for (std::size_t q = 0; q < pair_states.size(); ++q) {
      out += q == 0 ? "\n    [" : ",\n    [";
      out += std::to_string(pair_states[q].first) + "," + std::to_string(pair_states[q].subset) + "]";
    }
    out += "\n  ]";
  }
  out += "\n}\n";
  return out;
}

Dfa dfa_from_json(std::string_view text, std::size_t state_limit) {
  const Json doc = parse(text);
  DfaParts parts;
  parts.alphabet_size = as_index(field(doc, "alphabet_size"), "alphabet_size");
  parts.num_states = as_index(field(doc, "num_states"), "num_states");
  parts.start = as_state(field(doc, "start"), "start state");
  for (const Json& f : array_field(doc, "finals")) parts.finals.push_back(as_state(f, "final state"));
  for (const Json& row : array_field(doc, "delta")) {
    if (!row.is_array()) throw ParseError("each delta row must be an array");
    auto& out = parts.delta.emplace_back();
    for (const Json& t : row) out.push_back(as_state(t, "transition target"));
  }
  if (auto it = doc.find("labels"); it != doc.end()) {
    if (!it->is_array()) throw ParseError("field 'labels' must be an array");
    for (const Json& l : *it) {
      if (!l.is_string()) throw ParseError("labels must be strings");
      parts.labels.push_back(l.get<std::string>());
    }
  }
  return Dfa(parts, state_limit);
}

std::vector<PairState> pair_states_from_json(std::string_view text) {
  const Json doc = parse(text);
  std::vector<PairState> out;
  if (!doc.is_object() || !doc.contains("pair_states")) return out;
  for (const Json& entry : array_field(doc, "pair_states")) {
    if (!entry.is_array() || entry.size() != 2) throw ParseError("pair_states entries are [i, mask]");
    out.push_back({as_state(entry[0], "pair state"), as_index(entry[1], "subset mask")});
  }
  return out;
}

std::string length_set_to_json(const EventuallyPeriodicSet& s) {
  OrderedJson doc;
  doc["mu"] = s.mu();
  doc["lambda"] = s.lambda();
  doc["tail"] = s.tail();
  doc["cycle"] = s.cycle();
  return doc.dump() + "\n";
}

EventuallyPeriodicSet length_set_from_json(std::string_view text) {
  const Json doc = parse(text);
  const auto mu = as_index(field(doc, "mu"), "mu");
  const auto lambda = as_index(field(doc, "lambda"), "lambda");
  auto tail = bools(array_field(doc, "tail"), "tail");
  auto cycle = bools(array_field(doc, "cycle"), "cycle");
  if (tail.size() != mu) throw ParseError("tail length differs from mu");
  if (cycle.size() != lambda) throw ParseError("cycle length differs from lambda");
  if (lambda == 0) throw ParseError("lambda must be at least 1");
  return {std::move(tail), std::move(cycle)};
}

std::string reports_to_json(std::span<const VerificationReport> reports, bool timing) {
  OrderedJson arr = OrderedJson::array();
  for (const auto& r : reports) {
    OrderedJson row;
    row["family"] = std::string(to_string(r.family));
    row["n"] = r.n;
    row["k"] = r.k;
    row["raw"] = r.raw_states;
    row["minimal"] = r.minimal_states;
    row["expected"] = r.expected_states;
    row["pass"] = r.pass;
    row["ms"] = timing ? r.elapsed.count() : 0.0;
    arr.push_back(std::move(row));
  }
  return arr.dump(2) + "\n";
}

std::vector<VerificationReport> reports_from_json(std::string_view text) {
  const Json doc = parse(text);
  if (!doc.is_array()) throw ParseError("expected an array of reports");
  std::vector<VerificationReport> out;
  for (const Json& row : doc) {
    VerificationReport r;
    const Json& family = field(row, "family");
    if (!family.is_string()) throw ParseError("family must be a string");
    try {
      r.family = family_from_string(family.get<std::string>());
    } catch (const InvalidArgument& e) {
      throw ParseError(e.what());
    }
    r.n = static_cast<unsigned>(as_index(field(row, "n"), "n"));
    r.k = static_cast<unsigned>(as_index(field(row, "k"), "k"));
    r.raw_states = as_index(field(row, "raw"), "raw");
    r.minimal_states = as_index(field(row, "minimal"), "minimal");
    r.expected_states = as_index(field(row, "expected"), "expected");
    const Json& pass = field(row, "pass");
    if (!pass.is_boolean()) throw ParseError("pass must be a boolean");
    r.pass = pass.get<bool>();
    const Json& ms = field(row, "ms");
    if (!ms.is_number()) throw ParseError("ms must be a number");
    r.elapsed = std::chrono::duration<double, std::milli>(ms.get<double>());
    out.push_back(r);
  }
  return out;
}

std::string reports_to_csv(std::span<const VerificationReport> reports, bool timing) {
  std::string out = "family,n,k,raw,minimal,expected,pass,ms\n";
  for (const auto& r : reports) {
    out += std::string(to_string(r.family)) + "," + std::to_string(r.n) + "," +
           std::to_string(r.k) + "," + std::to_string(r.raw_states) + "," +
           std::to_string(r.minimal_states) + "," + std::to_string(r.expected_states) + "," +
           (r.pass ? "true" : "false") + "," + format_ms(r, timing) + "\n";
  }
  return out;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw ParseError("write to '" + path.string() + "' failed");
}

}  // namespace scx
