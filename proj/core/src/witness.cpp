#include "scx/witness.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

#include "scx/concat.hpp"
#include "scx/minimize.hpp"
#include "scx/unary.hpp"

namespace scx {

Dfa binary_witness(unsigned n) {
  if (n < 3) throw InvalidArgument("n must be >= 3 for the binary witness");
  std::vector<bool> finals(n, false);
  finals[n - 1] = true;
  std::vector<State> transitions(2 * static_cast<std::size_t>(n));
  for (State i = 0; i < n; ++i) {
    transitions[2 * i + 0] = i == 1 ? 0 : i;
    transitions[2 * i + 1] = (i + 1) % n;
  }
  return Dfa(2, 0, std::move(finals), std::move(transitions));
}

Dfa unary_cycle_witness(unsigned n) {
  if (n < 2) throw InvalidArgument("n must be >= 2 for the unary witness");
  std::vector<bool> finals(n, false);
  finals[n - 1] = true;
  std::vector<State> transitions(n);
  for (State i = 0; i < n; ++i) transitions[i] = (i + 1) % n;
  return Dfa(1, 0, std::move(finals), std::move(transitions));
}

std::uint64_t expected_square_states(unsigned n) {
  if (n < 3) throw InvalidArgument("n must be >= 3");
  if (n > 57) throw OverflowError("n * 2^n - 2^(n-1) overflows 64 bits");
  const std::uint64_t pow = std::uint64_t{1} << n;
  return n * pow - pow / 2;
}

std::uint64_t expected_unary_power_states(unsigned n, unsigned k) {
  if (n < 2) throw InvalidArgument("n must be >= 2");
  if (k < 2) throw InvalidArgument("k must be >= 2");
  return static_cast<std::uint64_t>(k) * n - k + 1;
}

std::string_view to_string(Family f) {
  switch (f) {
    case Family::BinarySquare:
      return "binary_square";
    case Family::UnaryPower:
      return "unary_power";
  }
  return "unknown";
}

Family family_from_string(std::string_view s) {
  if (s == "binary_square") return Family::BinarySquare;
  if (s == "unary_power") return Family::UnaryPower;
  throw InvalidArgument("unknown family '" + std::string(s) + "'");
}

namespace {

using Clock = std::chrono::steady_clock;

}  // namespace

VerificationReport verify_square(unsigned n, const VerifyOptions& options) {
  if (n < 3) throw InvalidArgument("n must be >= 3");
  const auto started = Clock::now();

  const Dfa witness = binary_witness(n);
  const auto raw = square_construction(witness, options.limits);
  const Dfa minimal = minimize(raw.dfa);
  if (n <= options.oracle_max_n &&
      !equivalent(raw.dfa, oracle_concat(witness, witness, options.limits))) {
    throw VerificationError("square construction and subset-construction oracle disagree at n=" +
                            std::to_string(n));
  }

  VerificationReport report;
  report.family = Family::BinarySquare;
  report.n = n;
  report.k = 2;
  report.raw_states = raw.dfa.num_states();
  report.minimal_states = minimal.num_states();
  report.expected_states = options.expected.square(n);
  report.pass = report.minimal_states == report.expected_states;
  report.elapsed = Clock::now() - started;
  return report;
}

VerificationReport verify_unary(unsigned n, unsigned k, const VerifyOptions& options) {
  if (n < 2) throw InvalidArgument("n must be >= 2");
  if (k < 2) throw InvalidArgument("k must be >= 2");
  const auto started = Clock::now();

  const Dfa witness = unary_cycle_witness(n);
  const Dfa by_lengths = from_length_set(unary_power(to_length_set(witness), k));
  const Dfa raw = power_construction(witness, k, options.limits);
  const Dfa by_automaton = minimize(raw);

  if (minimize(by_lengths).num_states() != by_lengths.num_states()) {
    throw VerificationError("length-set route produced a non-minimal DFA at n=" +
                            std::to_string(n) + ", k=" + std::to_string(k));
  }
  if (!isomorphic(by_lengths, by_automaton)) {
    throw VerificationError("length-set and automaton routes disagree at n=" + std::to_string(n) +
                            ", k=" + std::to_string(k));
  }

  VerificationReport report;
  report.family = Family::UnaryPower;
  report.n = n;
  report.k = k;
  report.raw_states = raw.num_states();
  report.minimal_states = by_automaton.num_states();
  report.expected_states = options.expected.unary_power(n, k);
  report.pass = report.minimal_states == report.expected_states;
  report.elapsed = Clock::now() - started;
  return report;
}

namespace {

// Runs jobs[i]() for every i on up to `threads` workers; results keep the
// job order. The first exception (by job index) is rethrown.
template <typename Job>
std::vector<VerificationReport> run_ordered(const std::vector<Job>& jobs, unsigned threads) {
  std::vector<VerificationReport> results(jobs.size());
  std::vector<std::exception_ptr> errors(jobs.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, jobs.size())));

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      try {
        results[i] = jobs[i]();
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

}  // namespace

std::vector<VerificationReport> verify_square_sweep(const std::vector<unsigned>& ns,
                                                    const VerifyOptions& options,
                                                    unsigned threads) {
  std::vector<unsigned> sorted = ns;
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::function<VerificationReport()>> jobs;
  for (unsigned n : sorted) jobs.emplace_back([n, &options] { return verify_square(n, options); });
  return run_ordered(jobs, threads);
}

std::vector<VerificationReport> verify_unary_sweep(const std::vector<unsigned>& ns,
                                                   const std::vector<unsigned>& ks,
                                                   const VerifyOptions& options,
                                                   unsigned threads) {
  std::vector<unsigned> sorted_n = ns, sorted_k = ks;
  std::sort(sorted_n.begin(), sorted_n.end());
  std::sort(sorted_k.begin(), sorted_k.end());
  std::vector<std::function<VerificationReport()>> jobs;
  for (unsigned n : sorted_n) {
    for (unsigned k : sorted_k) {
      jobs.emplace_back([n, k, &options] { return verify_unary(n, k, options); });
    }
  }
  return run_ordered(jobs, threads);
}

}  // namespace scx
