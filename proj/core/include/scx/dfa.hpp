#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "scx/error.hpp"

namespace scx {

using State = std::uint32_t;
using Symbol = std::uint32_t;
using Word = std::vector<Symbol>;

/// Unvalidated description of a DFA, as read from a file or written by hand.
/// delta[q][a] is the successor of state q on symbol a.
struct DfaParts {
  std::size_t alphabet_size = 0;
  std::size_t num_states = 0;
  State start = 0;
  std::vector<State> finals;
  std::vector<std::vector<State>> delta;
  std::vector<std::string> labels;  // optional display names, no semantics
};

/// Throws InvalidDfa describing the first violated invariant.
void validate(const DfaParts& parts, std::size_t state_limit = kDefaultStateLimit);

/// A complete deterministic finite automaton over the alphabet {0,...,k-1}.
/// Immutable after construction; every instance satisfies the invariants
/// checked by validate().
class Dfa {
 public:
  explicit Dfa(const DfaParts& parts, std::size_t state_limit = kDefaultStateLimit);

  /// Row-major transition table: transitions[q * alphabet_size + a].
  Dfa(std::size_t alphabet_size, State start, std::vector<bool> final_flags,
      std::vector<State> transitions, std::size_t state_limit = kDefaultStateLimit);

  std::size_t alphabet_size() const noexcept { return alphabet_size_; }
  std::size_t num_states() const noexcept { return final_flags_.size(); }
  State start() const noexcept { return start_; }

  bool is_final(State q) const { return final_flags_.at(q); }
  std::vector<State> finals() const;
  std::size_t final_count() const noexcept;

  /// Checked single transition.
  State step(State q, Symbol a) const;

  /// Unchecked single transition for hot loops over known-valid indices.
  State next(State q, Symbol a) const noexcept {
    return transitions_[static_cast<std::size_t>(q) * alphabet_size_ + a];
  }

  std::span<const State> row(State q) const {
    return {transitions_.data() + static_cast<std::size_t>(q) * alphabet_size_, alphabet_size_};
  }
  std::span<const State> transitions() const noexcept { return transitions_; }

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  Dfa with_labels(std::vector<std::string> labels) const;

  DfaParts parts() const;

  /// Structural equality; labels are ignored.
  friend bool operator==(const Dfa& a, const Dfa& b) {
    return a.alphabet_size_ == b.alphabet_size_ && a.start_ == b.start_ &&
           a.final_flags_ == b.final_flags_ && a.transitions_ == b.transitions_;
  }

 private:
  std::size_t alphabet_size_;
  State start_;
  std::vector<bool> final_flags_;
  std::vector<State> transitions_;
  std::vector<std::string> labels_;
};

/// State reached from `from` after reading w.
State run_from(const Dfa& d, State from, std::span<const Symbol> w);

/// State reached from the start state after reading w; run(d, {}) == start.
State run(const Dfa& d, std::span<const Symbol> w);

bool accepts(const Dfa& d, std::span<const Symbol> w);

/// Every accepted word of length <= max_len in length-then-lexicographic
/// order.
std::vector<Word> enumerate_language(const Dfa& d, std::size_t max_len);

/// "0110" -> {0,1,1,0}. Digits only; for alphabets of at most ten symbols.
Word parse_word(std::string_view digits);

/// Inverse of parse_word for small alphabets; symbols >= 10 are written as
/// "[17]".
std::string format_word(std::span<const Symbol> w);

}  // namespace scx
