#include "scx/unary.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace scx {

namespace {

constexpr State kUnseen = std::numeric_limits<State>::max();

void require_unary(const Dfa& d) {
  if (d.alphabet_size() != 1) {
    throw InvalidArgument("expected a unary DFA, alphabet size is " +
                          std::to_string(d.alphabet_size()));
  }
}

std::size_t checked_add(std::size_t a, std::size_t b) {
  std::size_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError("size arithmetic overflow");
  return out;
}

std::size_t checked_mul(std::size_t a, std::size_t b) {
  std::size_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("size arithmetic overflow");
  return out;
}

std::size_t checked_lcm(std::size_t a, std::size_t b) {
  return checked_mul(a / std::gcd(a, b), b);
}

// States along the start path, in order, and the index where the cycle
// begins.
struct UnaryPath {
  std::vector<State> states;
  std::size_t cycle_entry = 0;
};

UnaryPath follow_path(const Dfa& d) {
  require_unary(d);
  std::vector<State> position(d.num_states(), kUnseen);
  UnaryPath path;
  State q = d.start();
  while (position[q] == kUnseen) {
    position[q] = static_cast<State>(path.states.size());
    path.states.push_back(q);
    q = d.next(q, 0);
  }
  path.cycle_entry = position[q];
  return path;
}

}  // namespace

EventuallyPeriodicSet::EventuallyPeriodicSet() : cycle_{false} {}

EventuallyPeriodicSet::EventuallyPeriodicSet(std::vector<bool> tail, std::vector<bool> cycle)
    : tail_(std::move(tail)), cycle_(std::move(cycle)) {
  if (cycle_.empty()) throw InvalidArgument("cycle length lambda must be at least 1");
}

EventuallyPeriodicSet EventuallyPeriodicSet::arithmetic(std::size_t offset, std::size_t residue,
                                                        std::size_t period) {
  if (period == 0) throw InvalidArgument("period must be positive");
  std::vector<bool> tail(offset), cycle(period);
  for (std::size_t t = 0; t < offset; ++t) tail[t] = false;
  for (std::size_t j = 0; j < period; ++j) cycle[j] = (offset + j) % period == residue % period;
  return {std::move(tail), std::move(cycle)};
}

bool EventuallyPeriodicSet::contains(std::uint64_t length) const {
  if (length < tail_.size()) return tail_[length];
  return cycle_[(length - tail_.size()) % cycle_.size()];
}

bool EventuallyPeriodicSet::is_empty() const {
  return std::none_of(tail_.begin(), tail_.end(), [](bool b) { return b; }) &&
         std::none_of(cycle_.begin(), cycle_.end(), [](bool b) { return b; });
}

ChrobakSize chrobak_size(const Dfa& d) {
  const UnaryPath path = follow_path(d);
  return {path.states.size() - path.cycle_entry, path.cycle_entry};
}

EventuallyPeriodicSet to_length_set(const Dfa& d) {
  const UnaryPath path = follow_path(d);
  std::vector<bool> tail(path.cycle_entry), cycle(path.states.size() - path.cycle_entry);
  for (std::size_t t = 0; t < path.states.size(); ++t) {
    const bool member = d.is_final(path.states[t]);
    if (t < path.cycle_entry) {
      tail[t] = member;
    } else {
      cycle[t - path.cycle_entry] = member;
    }
  }
  return {std::move(tail), std::move(cycle)};
}

EventuallyPeriodicSet canonicalize(const EventuallyPeriodicSet& s) {
  std::vector<bool> tail = s.tail();
  std::vector<bool> cycle = s.cycle();

  const std::size_t lambda = cycle.size();
  for (std::size_t p = 1; p <= lambda; ++p) {
    if (lambda % p != 0) continue;
    bool periodic = true;
    for (std::size_t i = 0; i < lambda && periodic; ++i) periodic = cycle[i] == cycle[(i + p) % lambda];
    if (periodic) {
      cycle.resize(p);
      break;
    }
  }

  // The last tail length agrees with the cycle position it would occupy if
  // the cycle started one step earlier: absorb it.
  while (!tail.empty() && tail.back() == cycle.back()) {
    std::rotate(cycle.rbegin(), cycle.rbegin() + 1, cycle.rend());
    tail.pop_back();
  }
  return {std::move(tail), std::move(cycle)};
}

Dfa from_length_set(const EventuallyPeriodicSet& s) {
  const EventuallyPeriodicSet c = canonicalize(s);
  const std::size_t n = c.mu() + c.lambda();
  std::vector<bool> finals(n);
  std::vector<State> transitions(n);
  for (std::size_t q = 0; q < n; ++q) {
    finals[q] = c.contains(q);
    transitions[q] = static_cast<State>(q + 1 == n ? c.mu() : q + 1);
  }
  return Dfa(1, 0, std::move(finals), std::move(transitions), n);
}

EventuallyPeriodicSet unary_concat(const EventuallyPeriodicSet& s1,
                                   const EventuallyPeriodicSet& s2) {
  const std::size_t lambda = checked_lcm(s1.lambda(), s2.lambda());
  const std::size_t mu = checked_add(checked_add(s1.mu(), s2.mu()), lambda) - 1;
  const std::size_t horizon = checked_add(mu, lambda);

  std::vector<std::size_t> left, right;
  for (std::size_t t = 0; t < horizon; ++t) {
    if (s1.contains(t)) left.push_back(t);
    if (s2.contains(t)) right.push_back(t);
  }
  std::vector<bool> member(horizon, false);
  for (std::size_t a : left) {
    for (std::size_t b : right) {
      if (a + b >= horizon) break;
      member[a + b] = true;
    }
  }
  std::vector<bool> tail(member.begin(), member.begin() + static_cast<std::ptrdiff_t>(mu));
  std::vector<bool> cycle(member.begin() + static_cast<std::ptrdiff_t>(mu), member.end());
  return {std::move(tail), std::move(cycle)};
}

ChrobakSize unary_power_size(const ChrobakSize& size, unsigned k) {
  if (k < 2) throw InvalidArgument("power size needs k >= 2");
  if (size.lambda == 0) throw InvalidArgument("lambda must be at least 1");
  // k*mu + (k-1)*(lambda-1) == k*mu + (k-1)*lambda - k + 1
  const std::size_t mu =
      checked_add(checked_mul(k, size.mu), checked_mul(k - 1, size.lambda - 1));
  return {size.lambda, mu};
}

EventuallyPeriodicSet unary_power(const EventuallyPeriodicSet& s, unsigned k) {
  if (k == 0) throw InvalidArgument("power k must be at least 1");
  EventuallyPeriodicSet acc = s;
  for (unsigned step = 2; step <= k; ++step) acc = unary_concat(acc, s);
  return acc;
}

}  // namespace scx
