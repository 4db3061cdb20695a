#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "scx/dfa.hpp"

namespace scx {

/// Shape of a connected unary DFA: `mu` tail states feeding a cycle of
/// `lambda` states.
struct ChrobakSize {
  std::size_t lambda = 1;
  std::size_t mu = 0;

  std::size_t total() const noexcept { return lambda + mu; }
  friend bool operator==(const ChrobakSize&, const ChrobakSize&) = default;
};

/// A set of natural numbers (word lengths) that is periodic beyond a finite
/// prefix. Length t < mu is a member iff tail[t]; length t >= mu is a member
/// iff cycle[(t - mu) mod lambda].
///
/// The representation is not unique; from_length_set() canonicalizes.
class EventuallyPeriodicSet {
 public:
  /// The empty set in the smallest frame (mu = 0, lambda = 1).
  EventuallyPeriodicSet();

  /// Throws InvalidArgument when cycle is empty.
  EventuallyPeriodicSet(std::vector<bool> tail, std::vector<bool> cycle);

  /// {t : t >= offset and t == residue mod period}.
  static EventuallyPeriodicSet arithmetic(std::size_t offset, std::size_t residue,
                                          std::size_t period);

  std::size_t mu() const noexcept { return tail_.size(); }
  std::size_t lambda() const noexcept { return cycle_.size(); }
  ChrobakSize frame() const noexcept { return {lambda(), mu()}; }

  const std::vector<bool>& tail() const noexcept { return tail_; }
  const std::vector<bool>& cycle() const noexcept { return cycle_; }

  bool contains(std::uint64_t length) const;
  bool is_empty() const;

  /// Same frame, same bits.
  friend bool operator==(const EventuallyPeriodicSet&, const EventuallyPeriodicSet&) = default;

 private:
  std::vector<bool> tail_;
  std::vector<bool> cycle_;
};

/// Follows the successor path from the start state to the first repeated
/// state. Throws InvalidArgument for a non-unary alphabet.
ChrobakSize chrobak_size(const Dfa& d);

/// Lengths accepted by a unary DFA, in the frame chrobak_size(trim(d)).
EventuallyPeriodicSet to_length_set(const Dfa& d);

/// Shortest tail and primitive period for the same set of lengths.
EventuallyPeriodicSet canonicalize(const EventuallyPeriodicSet& s);

/// The minimal unary DFA for s: the canonical tail as a path, then the
/// canonical cycle.
Dfa from_length_set(const EventuallyPeriodicSet& s);

/// Sumset {a + b : a in s1, b in s2}, laid out in the frame
///   lambda = lcm(lambda1, lambda2),  mu = mu1 + mu2 + lambda - 1.
/// The frame is not canonicalized. Throws OverflowError.
EventuallyPeriodicSet unary_concat(const EventuallyPeriodicSet& s1,
                                   const EventuallyPeriodicSet& s2);

/// (lambda, k*mu + (k-1)*lambda - k + 1): the frame that bounds L^k when L
/// has shape `size`. Requires k >= 2; throws OverflowError.
ChrobakSize unary_power_size(const ChrobakSize& size, unsigned k);

/// k-fold left-folded sumset; k == 1 returns s unchanged.
EventuallyPeriodicSet unary_power(const EventuallyPeriodicSet& s, unsigned k);

}  // namespace scx
