#pragma once

#include <cstdint>
#include <vector>

#include "scx/dfa.hpp"

namespace scx {

/// A state (i, R) of the concatenation construction: a state of the first
/// machine plus a subset of the second machine's states (bit r set iff
/// r is in R).
struct PairState {
  State first = 0;
  std::uint64_t subset = 0;

  friend bool operator==(const PairState&, const PairState&) = default;
};

/// The constructed DFA together with the PairState each of its states
/// stands for (pair_states[q] describes state q).
struct ConcatResult {
  Dfa dfa;
  std::vector<PairState> pair_states;
};

/// Width cap on the second machine: subsets are 64-bit masks.
inline constexpr std::size_t kMaxSubsetStates = 64;

/// Number of states of the full construction, m * 2^n - f * 2^(n-1), where
/// m = |Q1|, n = |Q2| and f = |F1|. Throws OverflowError.
std::uint64_t concat_state_count(std::size_t first_states, std::size_t first_finals,
                                 std::size_t second_states);

/// Deterministic concatenation L(m1)L(m2) over the full state set
///   Q' = Q1 x 2^Q2  minus  { (f, R) : f in F1, start2 not in R },
/// unreachable states included. States are indexed lexicographically by
/// (first, subset-as-integer). Transitions:
///   (i, R) --a--> (d1(i,a), d2(R,a) + {start2})  if d1(i,a) in F1
///   (i, R) --a--> (d1(i,a), d2(R,a))             otherwise
/// and (i, R) is final iff R meets F2. When start1 is final the start state
/// is (start1, {start2}), otherwise (start1, {}).
ConcatResult yzs_concat(const Dfa& m1, const Dfa& m2, const Limits& limits = {});

/// Same transition rule, restricted to states reachable from the start and
/// numbered in breadth-first order.
ConcatResult yzs_concat_reachable(const Dfa& m1, const Dfa& m2, const Limits& limits = {});

/// yzs_concat(m, m).
ConcatResult square_construction(const Dfa& m, const Limits& limits = {});

/// DFA for L(m)^k built as L^(k-1) L with minimization between steps.
/// k == 1 returns m. The last concatenation step is returned unminimized.
Dfa power_construction(const Dfa& m, unsigned k, const Limits& limits = {});

/// Independent route to L(m1)L(m2): an epsilon-free NFA over Q1 + Q2,
/// determinized by accessible subset construction and minimized.
Dfa oracle_concat(const Dfa& m1, const Dfa& m2, const Limits& limits = {});

/// Word that drives square_construction(binary_witness(n)) from (0, {}) to
/// `target`:
///   1^n (10)^{s_k} 1^n (10)^{s_(k-1)} ... 1^n (10)^{s_1}
/// for first == 0, where R is ordered r_1 < ... (with 0 moved last when
/// present), s_1 = (r_1 - 1) mod n and s_j = (r_j - r_(j-1)) mod n.
/// For first == i > 0 the word for (0, R - i) is followed by 1^i.
/// Throws InvalidArgument for n < 3 or an excluded target.
Word reachability_word(unsigned n, const PairState& target);

}  // namespace scx
