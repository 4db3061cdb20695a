#pragma once

#include <cstddef>
#include <stdexcept>

namespace scx {

/// Upper bound on the number of states any construction may materialize.
inline constexpr std::size_t kDefaultStateLimit = std::size_t{1} << 20;

struct Limits {
  std::size_t max_states = kDefaultStateLimit;
};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A DFA description violates one of the completeness/range invariants.
class InvalidDfa : public Error {
 public:
  using Error::Error;
};

/// A precondition on an argument (range of n, k, symbol index, ...) failed.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class AlphabetMismatch : public Error {
 public:
  using Error::Error;
};

class StateLimitExceeded : public Error {
 public:
  using Error::Error;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

/// Malformed JSON or a JSON document with the wrong shape.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Two independent computations that must agree did not.
class VerificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace scx
