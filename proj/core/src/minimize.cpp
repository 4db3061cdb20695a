#include "scx/minimize.hpp"

#include <cstdint>
#include <deque>
#include <limits>
#include <unordered_map>
#include <unordered_set>

namespace scx {

namespace {

constexpr State kUnvisited = std::numeric_limits<State>::max();

std::uint64_t pack(std::uint32_t hi, std::uint32_t lo) {
  return (static_cast<std::uint64_t>(hi) << 32) | lo;
}

}  // namespace

Dfa trim(const Dfa& d) {
  const std::size_t k = d.alphabet_size();
  std::vector<State> renumber(d.num_states(), kUnvisited);
  std::vector<State> order;
  order.reserve(d.num_states());

  renumber[d.start()] = 0;
  order.push_back(d.start());
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (State t : d.row(order[head])) {
      if (renumber[t] == kUnvisited) {
        renumber[t] = static_cast<State>(order.size());
        order.push_back(t);
      }
    }
  }

  std::vector<bool> finals(order.size());
  std::vector<State> transitions;
  transitions.reserve(order.size() * k);
  for (std::size_t i = 0; i < order.size(); ++i) {
    finals[i] = d.is_final(order[i]);
    for (State t : d.row(order[i])) transitions.push_back(renumber[t]);
  }
  return Dfa(k, 0, std::move(finals), std::move(transitions), d.num_states())
      .with_labels(d.labels());
}

Dfa minimize(const Dfa& d) {
  const Dfa t = trim(d);
  const std::size_t n = t.num_states();
  const std::size_t k = t.alphabet_size();

  // Initial partition {F, Q \ F}, block ids dense from 0.
  std::vector<State> block(n);
  std::size_t count = 0;
  {
    State final_id = kUnvisited;
    State other_id = kUnvisited;
    for (State q = 0; q < n; ++q) {
      State& id = t.is_final(q) ? final_id : other_id;
      if (id == kUnvisited) id = static_cast<State>(count++);
      block[q] = id;
    }
  }

  // Each round splits every block by the blocks its successors occupied at
  // the start of the round, one symbol at a time.
  std::vector<State> refined(n);
  std::unordered_map<std::uint64_t, State> ids;
  while (true) {
    refined = block;
    std::size_t refined_count = count;
    for (Symbol a = 0; a < k; ++a) {
      ids.clear();
      ids.reserve(refined_count * 2);
      for (State q = 0; q < n; ++q) {
        auto key = pack(refined[q], block[t.next(q, a)]);
        auto [it, inserted] = ids.try_emplace(key, static_cast<State>(ids.size()));
        refined[q] = it->second;
      }
      refined_count = ids.size();
    }
    const bool stable = refined_count == count;
    block.swap(refined);
    count = refined_count;
    if (stable) break;
  }

  std::vector<State> representative(count, kUnvisited);
  for (State q = 0; q < n; ++q) {
    if (representative[block[q]] == kUnvisited) representative[block[q]] = q;
  }
  std::vector<bool> finals(count);
  std::vector<State> transitions(count * k);
  for (std::size_t b = 0; b < count; ++b) {
    const State rep = representative[b];
    finals[b] = t.is_final(rep);
    for (Symbol a = 0; a < k; ++a) transitions[b * k + a] = block[t.next(rep, a)];
  }
  return trim(Dfa(k, block[t.start()], std::move(finals), std::move(transitions), n)
                  .with_labels(d.labels()));
}

bool equivalent(const Dfa& a, const Dfa& b) {
  if (a.alphabet_size() != b.alphabet_size()) {
    throw AlphabetMismatch("cannot compare DFAs over alphabets of size " +
                           std::to_string(a.alphabet_size()) + " and " +
                           std::to_string(b.alphabet_size()));
  }
  std::unordered_set<std::uint64_t> seen;
  std::deque<std::pair<State, State>> queue;
  seen.insert(pack(a.start(), b.start()));
  queue.emplace_back(a.start(), b.start());
  while (!queue.empty()) {
    auto [p, q] = queue.front();
    queue.pop_front();
    if (a.is_final(p) != b.is_final(q)) return false;
    for (Symbol s = 0; s < a.alphabet_size(); ++s) {
      State p2 = a.next(p, s);
      State q2 = b.next(q, s);
      if (seen.insert(pack(p2, q2)).second) queue.emplace_back(p2, q2);
    }
  }
  return true;
}

bool isomorphic(const Dfa& a, const Dfa& b) {
  if (a.alphabet_size() != b.alphabet_size()) return false;
  return trim(a) == trim(b);
}

}  // namespace scx
