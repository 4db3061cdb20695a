#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

#include "scx/dfa.hpp"

namespace scx {

/// Binary witness for the square: states 0..n-1, start 0, F = {n-1},
///   d(1, 0) = 0,  d(i, 0) = i for i != 1,  d(i, 1) = (i + 1) mod n.
/// Requires n >= 3.
Dfa binary_witness(unsigned n);

/// Unary n-cycle with start 0 and F = {n-1}; accepts 0^(n-1) (0^n)*.
/// Requires n >= 2.
Dfa unary_cycle_witness(unsigned n);

/// n * 2^n - 2^(n-1), for n >= 3. Throws OverflowError past 64 bits.
std::uint64_t expected_square_states(unsigned n);

/// k * n - k + 1, for n >= 2 and k >= 2.
std::uint64_t expected_unary_power_states(unsigned n, unsigned k);

enum class Family { BinarySquare, UnaryPower };

std::string_view to_string(Family f);
Family family_from_string(std::string_view s);

struct VerificationReport {
  Family family = Family::BinarySquare;
  unsigned n = 0;
  unsigned k = 2;
  std::uint64_t raw_states = 0;
  std::uint64_t minimal_states = 0;
  std::uint64_t expected_states = 0;
  bool pass = false;  // minimal_states == expected_states
  std::chrono::duration<double, std::milli> elapsed{0};
};

/// Expected-size formulas checked by the verifiers. Replaceable so that a
/// deliberately wrong formula can be injected in tests.
struct ExpectedSizes {
  std::function<std::uint64_t(unsigned)> square = expected_square_states;
  std::function<std::uint64_t(unsigned, unsigned)> unary_power = expected_unary_power_states;
};

struct VerifyOptions {
  Limits limits;
  ExpectedSizes expected;
  /// Cross-check the square against the subset-construction oracle up to
  /// this n.
  unsigned oracle_max_n = 6;
};

/// Builds the full square construction of binary_witness(n), minimizes it
/// and compares with the expected size. Throws VerificationError if the
/// oracle disagrees on the language.
VerificationReport verify_square(unsigned n, const VerifyOptions& options = {});

/// Computes L^k of unary_cycle_witness(n) by the length-set route and by the
/// automaton route, requires the two minimal DFAs to be isomorphic (throws
/// VerificationError otherwise) and compares their size with the expected
/// one.
VerificationReport verify_unary(unsigned n, unsigned k, const VerifyOptions& options = {});

/// Verifies each n (and each k for the unary family), ordered by (n, k)
/// regardless of `threads`. threads == 0 uses the hardware concurrency.
std::vector<VerificationReport> verify_square_sweep(const std::vector<unsigned>& ns,
                                                    const VerifyOptions& options = {},
                                                    unsigned threads = 1);
std::vector<VerificationReport> verify_unary_sweep(const std::vector<unsigned>& ns,
                                                   const std::vector<unsigned>& ks,
                                                   const VerifyOptions& options = {},
                                                   unsigned threads = 1);

}  // namespace scx
