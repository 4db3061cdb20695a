#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>

#include "scx/concat.hpp"
#include "scx/io.hpp"
#include "scx/minimize.hpp"

namespace scx::cli {

std::vector<unsigned> Range::values() const {
  std::vector<unsigned> out;
  for (unsigned v = lo; v <= hi; ++v) {
    out.push_back(v);
    if (v == hi) break;
  }
  return out;
}

namespace {

unsigned parse_unsigned(std::string_view text, const std::string& whole) {
  unsigned value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw InvalidArgument("malformed range '" + whole + "' (expected a..b or a single value)");
  }
  return value;
}

}  // namespace

Range parse_range(const std::string& text) {
  const auto dots = text.find("..");
  Range r;
  if (dots == std::string::npos) {
    r.lo = r.hi = parse_unsigned(text, text);
  } else {
    r.lo = parse_unsigned(std::string_view(text).substr(0, dots), text);
    r.hi = parse_unsigned(std::string_view(text).substr(dots + 2), text);
  }
  if (r.lo > r.hi) throw InvalidArgument("empty range '" + text + "'");
  return r;
}

namespace {

enum class Format { Table, Csv, Json };

struct Config {
  Format format = Format::Table;
  bool parallel = false;
  bool timing = false;
  std::size_t state_limit = kDefaultStateLimit;
  std::string n_text;
  std::string k_text;
  std::vector<std::string> inputs;
  std::string out_path;
  unsigned k = 1;
  unsigned n = 0;
  std::string family;
  std::size_t max_len = 10;
  bool trim_square = false;
};

std::string format_table(const std::vector<VerificationReport>& reports, bool timing) {
  std::ostringstream os;
  os << std::left << std::setw(15) << "family" << std::right << std::setw(4) << "n"
     << std::setw(4) << "k" << std::setw(10) << "raw" << std::setw(10) << "minimal"
     << std::setw(10) << "expected" << std::setw(6) << "pass";
  if (timing) os << std::setw(12) << "ms";
  os << "\n";
  for (const auto& r : reports) {
    os << std::left << std::setw(15) << to_string(r.family) << std::right << std::setw(4) << r.n
       << std::setw(4) << r.k << std::setw(10) << r.raw_states << std::setw(10)
       << r.minimal_states << std::setw(10) << r.expected_states << std::setw(6)
       << (r.pass ? "yes" : "NO");
    if (timing) os << std::setw(12) << std::fixed << std::setprecision(2) << r.elapsed.count();
    os << "\n";
  }
  return os.str();
}

int emit_reports(const std::vector<VerificationReport>& reports, const Config& cfg,
                 std::ostream& out) {
  switch (cfg.format) {
    case Format::Table:
      out << format_table(reports, cfg.timing);
      break;
    case Format::Csv:
      out << reports_to_csv(reports, cfg.timing);
      break;
    case Format::Json:
      out << reports_to_json(reports, cfg.timing);
      break;
  }
  const bool all_pass =
      std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.pass; });
  return all_pass ? kOk : kCheckFailed;
}

VerifyOptions verify_options(const Config& cfg, const ExpectedSizes& expected) {
  VerifyOptions options;
  options.limits.max_states = cfg.state_limit;
  options.expected = expected;
  return options;
}

unsigned threads_for(const Config& cfg) { return cfg.parallel ? 0 : 1; }

Dfa load(const std::string& path, const Config& cfg) {
  return dfa_from_json(read_text_file(path), cfg.state_limit);
}

const std::string& single_input(const Config& cfg) {
  if (cfg.inputs.size() != 1) throw InvalidArgument("expected exactly one input file");
  return cfg.inputs.front();
}

// Writes a document to --out, or to stdout when no path was given. The
// summary line goes to stdout alongside a file, otherwise to stderr.
void deliver(const std::string& document, const std::string& summary, const Config& cfg,
             std::ostream& out, std::ostream& err) {
  if (cfg.out_path.empty()) {
    out << document;
    if (!summary.empty()) err << summary << "\n";
  } else {
    write_text_file(cfg.out_path, document);
    if (!summary.empty()) out << summary << "\n";
  }
}

int cmd_verify_square(const Config& cfg, const ExpectedSizes& expected, std::ostream& out) {
  const Range range = parse_range(cfg.n_text);
  if (range.lo < 3) throw InvalidArgument("n must be ≥ 3");
  const auto reports =
      verify_square_sweep(range.values(), verify_options(cfg, expected), threads_for(cfg));
  return emit_reports(reports, cfg, out);
}

int cmd_verify_unary(const Config& cfg, const ExpectedSizes& expected, std::ostream& out) {
  const Range ns = parse_range(cfg.n_text);
  const Range ks = parse_range(cfg.k_text);
  if (ns.lo < 2) throw InvalidArgument("n must be ≥ 2");
  if (ks.lo < 2) throw InvalidArgument("k must be ≥ 2");
  const auto reports = verify_unary_sweep(ns.values(), ks.values(),
                                          verify_options(cfg, expected), threads_for(cfg));
  return emit_reports(reports, cfg, out);
}

int cmd_power(const Config& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.k < 1) throw InvalidArgument("k must be ≥ 1");
  const Dfa d = load(single_input(cfg), cfg);
  const Dfa result = minimize(power_construction(d, cfg.k, Limits{cfg.state_limit}));
  deliver(dfa_to_json(result), "states: " + std::to_string(result.num_states()), cfg, out, err);
  return kOk;
}

int cmd_square(const Config& cfg, std::ostream& out, std::ostream& err) {
  const Dfa d = load(single_input(cfg), cfg);
  const Limits limits{cfg.state_limit};
  const ConcatResult result =
      cfg.trim_square ? yzs_concat_reachable(d, d, limits) : square_construction(d, limits);
  deliver(dfa_to_json(result.dfa, result.pair_states),
          "states: " + std::to_string(result.dfa.num_states()), cfg, out, err);
  return kOk;
}

int cmd_witness(const Config& cfg, std::ostream& out, std::ostream& err) {
  Dfa d = cfg.family == "binary" ? binary_witness(cfg.n) : unary_cycle_witness(cfg.n);
  deliver(dfa_to_json(d), "", cfg, out, err);
  return kOk;
}

int cmd_min(const Config& cfg, std::ostream& out, std::ostream& err) {
  const Dfa d = load(single_input(cfg), cfg);
  const Dfa m = minimize(d);
  deliver(dfa_to_json(m),
          "states: " + std::to_string(d.num_states()) + " -> " + std::to_string(m.num_states()),
          cfg, out, err);
  return kOk;
}

int cmd_equiv(const Config& cfg, std::ostream& out) {
  if (cfg.inputs.size() != 2) throw InvalidArgument("equiv needs exactly two input files");
  const Dfa a = load(cfg.inputs[0], cfg);
  const Dfa b = load(cfg.inputs[1], cfg);
  const bool same = equivalent(a, b);
  out << (same ? "equivalent" : "different") << "\n";
  return same ? kOk : kCheckFailed;
}

int cmd_enum(const Config& cfg, std::ostream& out) {
  const Dfa d = load(single_input(cfg), cfg);
  const auto words = enumerate_language(d, cfg.max_len);
  switch (cfg.format) {
    case Format::Table:
      for (const auto& w : words) out << (w.empty() ? "ε" : format_word(w)) << "\n";
      break;
    case Format::Csv:
      out << "length,word\n";
      for (const auto& w : words) out << w.size() << "," << format_word(w) << "\n";
      break;
    case Format::Json: {
      std::vector<std::string> text;
      for (const auto& w : words) text.push_back(format_word(w));
      out << "[";
      for (std::size_t i = 0; i < text.size(); ++i) out << (i ? "," : "") << '"' << text[i] << '"';
      out << "]\n";
      break;
    }
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const ExpectedSizes& expected) {
  Config cfg;
  CLI::App app{"State complexity toolkit for squares and powers of regular languages", "scx"};
  app.fallthrough();
  app.require_subcommand(1);

  const std::map<std::string, Format> formats{
      {"table", Format::Table}, {"csv", Format::Csv}, {"json", Format::Json}};
  app.add_option("--format", cfg.format, "Output format: table, csv or json")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  app.add_flag("--parallel", cfg.parallel, "Verify independent cells on worker threads");
  app.add_flag("--timing", cfg.timing, "Report elapsed milliseconds (breaks byte stability)");
  app.add_option("--state-limit", cfg.state_limit, "Maximum states any construction may build")
      ->check(CLI::PositiveNumber);

  auto* verify_square = app.add_subcommand("verify-square", "Verify the binary square witness");
  verify_square->add_option("--n", cfg.n_text, "n range, a..b or a")->required();

  auto* verify_unary = app.add_subcommand("verify-unary", "Verify the unary power witness");
  verify_unary->add_option("--n", cfg.n_text, "n range, a..b or a")->required();
  verify_unary->add_option("--k", cfg.k_text, "k range, a..b or a")->required();

  auto* power = app.add_subcommand("power", "Minimal DFA for L^k of a DFA file");
  power->add_option("input,--in", cfg.inputs, "Input DFA (JSON)")->required();
  power->add_option("--k", cfg.k, "Exponent k >= 1")->required();
  power->add_option("--out", cfg.out_path, "Output path (stdout if omitted)");

  auto* square = app.add_subcommand("square", "Concatenation construction for L^2");
  square->add_option("input,--in", cfg.inputs, "Input DFA (JSON)")->required();
  square->add_option("--out", cfg.out_path, "Output path (stdout if omitted)");
  square->add_flag("--trim", cfg.trim_square, "Keep only states reachable from the start");

  auto* witness = app.add_subcommand("witness", "Emit a witness DFA");
  witness->add_option("family", cfg.family, "binary or unary")
      ->required()
      ->check(CLI::IsMember({"binary", "unary"}));
  witness->add_option("--n", cfg.n, "Number of states")->required();
  witness->add_option("--out", cfg.out_path, "Output path (stdout if omitted)");

  auto* min = app.add_subcommand("min", "Minimize a DFA file");
  min->add_option("input,--in", cfg.inputs, "Input DFA (JSON)")->required();
  min->add_option("--out", cfg.out_path, "Output path (stdout if omitted)");

  auto* equiv = app.add_subcommand("equiv", "Test two DFA files for language equality");
  equiv->add_option("inputs,--in", cfg.inputs, "Two input DFAs (JSON)")->required()->expected(2);

  auto* enumerate = app.add_subcommand("enum", "List accepted words up to a length");
  enumerate->add_option("input,--in", cfg.inputs, "Input DFA (JSON)")->required();
  enumerate->add_option("--max-len", cfg.max_len, "Maximum word length");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (verify_square->parsed()) return cmd_verify_square(cfg, expected, out);
    if (verify_unary->parsed()) return cmd_verify_unary(cfg, expected, out);
    if (power->parsed()) return cmd_power(cfg, out, err);
    if (square->parsed()) return cmd_square(cfg, out, err);
    if (witness->parsed()) return cmd_witness(cfg, out, err);
    if (min->parsed()) return cmd_min(cfg, out, err);
    if (equiv->parsed()) return cmd_equiv(cfg, out);
    if (enumerate->parsed()) return cmd_enum(cfg, out);
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const InvalidDfa& e) {
    err << "error: invalid DFA: " << e.what() << "\n";
    return kUsageError;
  } catch (const AlphabetMismatch& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    // State-limit breaches, overflow and route disagreements are failed checks.
    err << "error: " << e.what() << "\n";
    return kCheckFailed;
  }
  return kUsageError;
}

}  // namespace scx::cli
