#include "scx/dfa.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <utility>

namespace scx {

void validate(const DfaParts& parts, std::size_t state_limit) {
  if (parts.alphabet_size == 0) throw InvalidDfa("alphabet_size must be positive");
  if (parts.num_states == 0) throw InvalidDfa("num_states must be positive");
  if (parts.num_states > state_limit ||
      parts.num_states > std::numeric_limits<State>::max()) {
    throw StateLimitExceeded("state count " + std::to_string(parts.num_states) +
                             " exceeds limit " + std::to_string(state_limit));
  }
  if (parts.start >= parts.num_states) throw InvalidDfa("start state out of range");
  for (State f : parts.finals) {
    if (f >= parts.num_states) throw InvalidDfa("final state out of range");
  }
  if (parts.delta.size() != parts.num_states) {
    throw InvalidDfa("missing transition row: expected " + std::to_string(parts.num_states) +
                     " rows, got " + std::to_string(parts.delta.size()));
  }
  for (std::size_t q = 0; q < parts.delta.size(); ++q) {
    const auto& row = parts.delta[q];
    if (row.size() != parts.alphabet_size) {
      throw InvalidDfa("ragged transition row " + std::to_string(q) + ": expected " +
                       std::to_string(parts.alphabet_size) + " entries, got " +
                       std::to_string(row.size()));
    }
    for (State target : row) {
      if (target >= parts.num_states) throw InvalidDfa("transition target out of range");
    }
  }
  if (!parts.labels.empty() && parts.labels.size() != parts.alphabet_size) {
    throw InvalidDfa("labels must name every symbol");
  }
}

namespace {

std::vector<bool> flags_from(const DfaParts& parts) {
  std::vector<bool> flags(parts.num_states, false);
  for (State f : parts.finals) flags[f] = true;
  return flags;
}

std::vector<State> flatten(const DfaParts& parts) {
  std::vector<State> out;
  out.reserve(parts.num_states * parts.alphabet_size);
  for (const auto& row : parts.delta) out.insert(out.end(), row.begin(), row.end());
  return out;
}

const DfaParts& validated(const DfaParts& parts, std::size_t state_limit) {
  validate(parts, state_limit);
  return parts;
}

}  // namespace

Dfa::Dfa(const DfaParts& parts, std::size_t state_limit)
    : alphabet_size_(validated(parts, state_limit).alphabet_size),
      start_(parts.start),
      final_flags_(flags_from(parts)),
      transitions_(flatten(parts)),
      labels_(parts.labels) {}

Dfa::Dfa(std::size_t alphabet_size, State start, std::vector<bool> final_flags,
         std::vector<State> transitions, std::size_t state_limit)
    : alphabet_size_(alphabet_size),
      start_(start),
      final_flags_(std::move(final_flags)),
      transitions_(std::move(transitions)) {
  const std::size_t n = final_flags_.size();
  if (alphabet_size_ == 0) throw InvalidDfa("alphabet_size must be positive");
  if (n == 0) throw InvalidDfa("num_states must be positive");
  if (n > state_limit || n > std::numeric_limits<State>::max()) {
    throw StateLimitExceeded("state count " + std::to_string(n) + " exceeds limit " +
                             std::to_string(state_limit));
  }
  if (start_ >= n) throw InvalidDfa("start state out of range");
  if (transitions_.size() != n * alphabet_size_) throw InvalidDfa("missing transition row");
  for (State target : transitions_) {
    if (target >= n) throw InvalidDfa("transition target out of range");
  }
}

std::vector<State> Dfa::finals() const {
  std::vector<State> out;
  for (std::size_t q = 0; q < final_flags_.size(); ++q) {
    if (final_flags_[q]) out.push_back(static_cast<State>(q));
  }
  return out;
}

std::size_t Dfa::final_count() const noexcept {
  return static_cast<std::size_t>(std::count(final_flags_.begin(), final_flags_.end(), true));
}

State Dfa::step(State q, Symbol a) const {
  if (q >= num_states()) throw InvalidArgument("state out of range");
  if (a >= alphabet_size_) throw InvalidArgument("symbol out of range");
  return next(q, a);
}

Dfa Dfa::with_labels(std::vector<std::string> labels) const {
  if (!labels.empty() && labels.size() != alphabet_size_) {
    throw InvalidDfa("labels must name every symbol");
  }
  Dfa copy = *this;
  copy.labels_ = std::move(labels);
  return copy;
}

DfaParts Dfa::parts() const {
  DfaParts p;
  p.alphabet_size = alphabet_size_;
  p.num_states = num_states();
  p.start = start_;
  p.finals = finals();
  p.delta.resize(num_states());
  for (std::size_t q = 0; q < num_states(); ++q) {
    auto r = row(static_cast<State>(q));
    p.delta[q].assign(r.begin(), r.end());
  }
  p.labels = labels_;
  return p;
}

State run_from(const Dfa& d, State from, std::span<const Symbol> w) {
  if (from >= d.num_states()) throw InvalidArgument("state out of range");
  State q = from;
  for (Symbol a : w) {
    if (a >= d.alphabet_size()) throw InvalidArgument("symbol out of range");
    q = d.next(q, a);
  }
  return q;
}

State run(const Dfa& d, std::span<const Symbol> w) { return run_from(d, d.start(), w); }

bool accepts(const Dfa& d, std::span<const Symbol> w) { return d.is_final(run(d, w)); }

namespace {

// Length of the shortest word leading from each state into F (SIZE_MAX when
// no final state is reachable).
std::vector<std::size_t> distance_to_final(const Dfa& d) {
  const std::size_t n = d.num_states();
  constexpr auto kInf = std::numeric_limits<std::size_t>::max();
  std::vector<std::vector<State>> preds(n);
  for (State q = 0; q < n; ++q) {
    for (State t : d.row(q)) preds[t].push_back(q);
  }
  std::vector<std::size_t> dist(n, kInf);
  std::deque<State> queue;
  for (State q = 0; q < n; ++q) {
    if (d.is_final(q)) {
      dist[q] = 0;
      queue.push_back(q);
    }
  }
  while (!queue.empty()) {
    State t = queue.front();
    queue.pop_front();
    for (State p : preds[t]) {
      if (dist[p] == kInf) {
        dist[p] = dist[t] + 1;
        queue.push_back(p);
      }
    }
  }
  return dist;
}

}  // namespace

std::vector<Word> enumerate_language(const Dfa& d, std::size_t max_len) {
  const auto dist = distance_to_final(d);
  std::vector<Word> accepted;
  std::vector<std::pair<Word, State>> level;
  if (dist[d.start()] <= max_len) level.emplace_back(Word{}, d.start());

  for (std::size_t len = 0; !level.empty(); ++len) {
    for (const auto& [w, q] : level) {
      if (d.is_final(q)) accepted.push_back(w);
    }
    if (len == max_len) break;
    const std::size_t remaining = max_len - len - 1;
    std::vector<std::pair<Word, State>> next_level;
    for (const auto& [w, q] : level) {
      for (Symbol a = 0; a < d.alphabet_size(); ++a) {
        State t = d.next(q, a);
        // Skip prefixes that cannot reach F within the remaining budget.
        if (dist[t] > remaining) continue;
        Word extended = w;
        extended.push_back(a);
        next_level.emplace_back(std::move(extended), t);
      }
    }
    level = std::move(next_level);
  }
  return accepted;
}

Word parse_word(std::string_view digits) {
  Word w;
  w.reserve(digits.size());
  for (char c : digits) {
    if (c < '0' || c > '9') throw InvalidArgument(std::string("not a symbol digit: '") + c + "'");
    w.push_back(static_cast<Symbol>(c - '0'));
  }
  return w;
}

std::string format_word(std::span<const Symbol> w) {
  std::string out;
  for (Symbol a : w) {
    if (a < 10) {
      out.push_back(static_cast<char>('0' + a));
    } else {
      out += "[" + std::to_string(a) + "]";
    }
  }
  return out;
}

}  // namespace scx
