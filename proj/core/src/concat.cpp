#include "scx/concat.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <unordered_map>

#include "scx/minimize.hpp"

namespace scx {

namespace {

std::uint64_t bit(std::size_t r) { return std::uint64_t{1} << r; }

void require_same_alphabet(const Dfa& m1, const Dfa& m2) {
  if (m1.alphabet_size() != m2.alphabet_size()) {
    throw AlphabetMismatch("concatenation needs equal alphabets, got " +
                           std::to_string(m1.alphabet_size()) + " and " +
                           std::to_string(m2.alphabet_size()));
  }
}

void require_subset_width(const Dfa& m2) {
  if (m2.num_states() > kMaxSubsetStates) {
    throw StateLimitExceeded("second machine has " + std::to_string(m2.num_states()) +
                             " states; subsets are limited to " +
                             std::to_string(kMaxSubsetStates));
  }
}

// Per-symbol image of each single state of the second machine, as masks.
class SubsetImage {
 public:
  explicit SubsetImage(const Dfa& m2) : width_(m2.num_states()) {
    images_.resize(m2.alphabet_size() * width_);
    for (Symbol a = 0; a < m2.alphabet_size(); ++a) {
      for (State r = 0; r < width_; ++r) images_[a * width_ + r] = bit(m2.next(r, a));
    }
  }

  std::uint64_t operator()(std::uint64_t subset, Symbol a) const {
    std::uint64_t out = 0;
    const std::uint64_t* row = images_.data() + a * width_;
    while (subset != 0) {
      out |= row[std::countr_zero(subset)];
      subset &= subset - 1;
    }
    return out;
  }

 private:
  std::size_t width_;
  std::vector<std::uint64_t> images_;
};

std::uint64_t final_mask(const Dfa& m2) {
  std::uint64_t mask = 0;
  for (State f : m2.finals()) mask |= bit(f);
  return mask;
}

PairState successor(const Dfa& m1, const SubsetImage& image, State start2, const PairState& p,
                    Symbol a) {
  const State i2 = m1.next(p.first, a);
  std::uint64_t r2 = image(p.subset, a);
  if (m1.is_final(i2)) r2 |= bit(start2);
  return {i2, r2};
}

PairState start_pair(const Dfa& m1, const Dfa& m2) {
  return {m1.start(), m1.is_final(m1.start()) ? bit(m2.start()) : 0};
}

struct PairHash {
  std::size_t operator()(const PairState& p) const noexcept {
    std::uint64_t h = p.subset * 0x9E3779B97F4A7C15ull;
    h ^= (static_cast<std::uint64_t>(p.first) + 0x632BE59BD9B4E019ull) + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

}  // namespace

std::uint64_t concat_state_count(std::size_t first_states, std::size_t first_finals,
                                 std::size_t second_states) {
  if (second_states == 0 || second_states > kMaxSubsetStates) {
    throw OverflowError("second machine size out of range for the subset construction");
  }
  using Wide = unsigned __int128;
  const Wide full = static_cast<Wide>(first_states) << second_states;
  const Wide excluded = static_cast<Wide>(first_finals) << (second_states - 1);
  const Wide count = full - excluded;
  if (count > static_cast<Wide>(UINT64_MAX)) throw OverflowError("state count overflows 64 bits");
  return static_cast<std::uint64_t>(count);
}

ConcatResult yzs_concat(const Dfa& m1, const Dfa& m2, const Limits& limits) {
  require_same_alphabet(m1, m2);
  require_subset_width(m2);
  const std::size_t k = m1.alphabet_size();
  const std::size_t n2 = m2.num_states();
  const State start2 = m2.start();

  std::uint64_t total = 0;
  try {
    total = concat_state_count(m1.num_states(), m1.final_count(), n2);
  } catch (const OverflowError&) {
    throw StateLimitExceeded("concatenation state count overflows 64 bits");
  }
  if (total > limits.max_states) {
    throw StateLimitExceeded("concatenation needs " + std::to_string(total) +
                             " states, limit is " + std::to_string(limits.max_states));
  }

  // offset[i] is the index of the first state whose first component is i.
  std::vector<std::uint64_t> offset(m1.num_states());
  std::uint64_t running = 0;
  for (State i = 0; i < m1.num_states(); ++i) {
    offset[i] = running;
    running += m1.is_final(i) ? (std::uint64_t{1} << (n2 - 1)) : (std::uint64_t{1} << (n2 - 1)) * 2;
  }
  const std::uint64_t low_mask = bit(start2) - 1;
  auto index_of = [&](const PairState& p) -> State {
    if (!m1.is_final(p.first)) return static_cast<State>(offset[p.first] + p.subset);
    // Drop the always-set start2 bit; this keeps the lexicographic order.
    const std::uint64_t high = start2 + 1 < 64 ? (p.subset >> (start2 + 1)) << start2 : 0;
    return static_cast<State>(offset[p.first] + (high | (p.subset & low_mask)));
  };

  const SubsetImage image(m2);
  const std::uint64_t f2 = final_mask(m2);
  const std::uint64_t subset_count_minus_one = n2 == 64 ? UINT64_MAX : bit(n2) - 1;

  std::vector<PairState> pairs;
  pairs.reserve(total);
  std::vector<bool> finals;
  finals.reserve(total);
  std::vector<State> transitions;
  transitions.reserve(total * k);
  for (State i = 0; i < m1.num_states(); ++i) {
    const bool excluded_rule = m1.is_final(i);
    for (std::uint64_t r = 0;; ++r) {
      if (!excluded_rule || (r & bit(start2)) != 0) {
        const PairState p{i, r};
        pairs.push_back(p);
        finals.push_back((r & f2) != 0);
        for (Symbol a = 0; a < k; ++a) {
          transitions.push_back(index_of(successor(m1, image, start2, p, a)));
        }
      }
      if (r == subset_count_minus_one) break;
    }
  }

  const State start = index_of(start_pair(m1, m2));
  return {Dfa(k, start, std::move(finals), std::move(transitions), limits.max_states),
          std::move(pairs)};
}

ConcatResult yzs_concat_reachable(const Dfa& m1, const Dfa& m2, const Limits& limits) {
  require_same_alphabet(m1, m2);
  require_subset_width(m2);
  const std::size_t k = m1.alphabet_size();
  const State start2 = m2.start();
  const SubsetImage image(m2);
  const std::uint64_t f2 = final_mask(m2);

  std::unordered_map<PairState, State, PairHash> index;
  std::vector<PairState> pairs{start_pair(m1, m2)};
  index.emplace(pairs.front(), 0);
  std::vector<State> transitions;
  for (std::size_t head = 0; head < pairs.size(); ++head) {
    for (Symbol a = 0; a < k; ++a) {
      const PairState next = successor(m1, image, start2, pairs[head], a);
      auto [it, inserted] = index.try_emplace(next, static_cast<State>(pairs.size()));
      if (inserted) {
        if (pairs.size() >= limits.max_states) {
          throw StateLimitExceeded("concatenation exceeds the state limit of " +
                                   std::to_string(limits.max_states));
        }
        pairs.push_back(next);
      }
      transitions.push_back(it->second);
    }
  }

  std::vector<bool> finals(pairs.size());
  for (std::size_t q = 0; q < pairs.size(); ++q) finals[q] = (pairs[q].subset & f2) != 0;
  return {Dfa(k, 0, std::move(finals), std::move(transitions), limits.max_states),
          std::move(pairs)};
}

ConcatResult square_construction(const Dfa& m, const Limits& limits) {
  return yzs_concat(m, m, limits);
}

Dfa power_construction(const Dfa& m, unsigned k, const Limits& limits) {
  if (k == 0) throw InvalidArgument("power k must be at least 1");
  Dfa acc = m;
  for (unsigned step = 2; step <= k; ++step) {
    acc = yzs_concat_reachable(minimize(acc), m, limits).dfa;
  }
  return acc;
}

Dfa oracle_concat(const Dfa& m1, const Dfa& m2, const Limits& limits) {
  require_same_alphabet(m1, m2);
  const std::size_t k = m1.alphabet_size();
  const std::size_t n1 = m1.num_states();
  const std::size_t width = n1 + m2.num_states();
  const std::size_t words = (width + 63) / 64;
  using Bits = std::vector<std::uint64_t>;
  auto set = [](Bits& b, std::size_t i) { b[i / 64] |= std::uint64_t{1} << (i % 64); };

  // NFA states: 0..n1-1 are m1's, n1.. are m2's. Entering a final state of
  // m1 also enters m2's start state.
  Bits initial(words, 0);
  set(initial, m1.start());
  if (m1.is_final(m1.start())) set(initial, n1 + m2.start());

  std::map<Bits, State> index;
  std::vector<Bits> subsets{initial};
  index.emplace(initial, 0);
  std::vector<State> transitions;
  for (std::size_t head = 0; head < subsets.size(); ++head) {
    for (Symbol a = 0; a < k; ++a) {
      Bits image(words, 0);
      const Bits& from = subsets[head];
      for (std::size_t w = 0; w < words; ++w) {
        for (std::uint64_t chunk = from[w]; chunk != 0; chunk &= chunk - 1) {
          const std::size_t p = w * 64 + std::countr_zero(chunk);
          if (p < n1) {
            const State t = m1.next(static_cast<State>(p), a);
            set(image, t);
            if (m1.is_final(t)) set(image, n1 + m2.start());
          } else {
            set(image, n1 + m2.next(static_cast<State>(p - n1), a));
          }
        }
      }
      auto [it, inserted] = index.try_emplace(image, static_cast<State>(subsets.size()));
      if (inserted) {
        if (subsets.size() >= limits.max_states) {
          throw StateLimitExceeded("subset construction exceeds the state limit of " +
                                   std::to_string(limits.max_states));
        }
        subsets.push_back(std::move(image));
      }
      transitions.push_back(it->second);
    }
  }

  std::vector<bool> finals(subsets.size(), false);
  for (std::size_t q = 0; q < subsets.size(); ++q) {
    for (State f : m2.finals()) {
      const std::size_t p = n1 + f;
      if ((subsets[q][p / 64] >> (p % 64)) & 1u) {
        finals[q] = true;
        break;
      }
    }
  }
  return minimize(Dfa(k, 0, std::move(finals), std::move(transitions), limits.max_states));
}

Word reachability_word(unsigned n, const PairState& target) {
  if (n < 3) throw InvalidArgument("reachability words are defined for n >= 3");
  if (n > kMaxSubsetStates) throw InvalidArgument("n exceeds the subset width");
  if (target.first >= n) throw InvalidArgument("first component out of range");
  if (n < 64 && (target.subset >> n) != 0) throw InvalidArgument("subset out of range");
  if (target.first == n - 1 && (target.subset & 1u) == 0) {
    throw InvalidArgument("excluded state: final first component requires 0 in the subset");
  }

  const unsigned shift = target.first;
  std::vector<unsigned> ordered;  // r_1 < ... < r_(k-1), then 0 if present
  bool has_zero = false;
  for (unsigned r = 0; r < n; ++r) {
    if ((target.subset >> r) & 1u) {
      const unsigned shifted = (r + n - shift) % n;
      if (shifted == 0) {
        has_zero = true;
      } else {
        ordered.push_back(shifted);
      }
    }
  }
  std::sort(ordered.begin(), ordered.end());
  if (has_zero) ordered.push_back(0);

  std::vector<unsigned> shifts(ordered.size());
  for (std::size_t j = 0; j < ordered.size(); ++j) {
    const unsigned prev = j == 0 ? 1 : ordered[j - 1];
    shifts[j] = (ordered[j] + n - prev) % n;
  }

  Word w;
  for (std::size_t j = ordered.size(); j-- > 0;) {
    w.insert(w.end(), n, 1);
    for (unsigned s = 0; s < shifts[j]; ++s) {
      w.push_back(1);
      w.push_back(0);
    }
  }
  w.insert(w.end(), shift, 1);
  return w;
}

}  // namespace scx
