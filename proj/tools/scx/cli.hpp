#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "scx/witness.hpp"

namespace scx::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kUsageError = 2,
};

/// Inclusive range parsed from "a..b" or a single "a".
struct Range {
  unsigned lo = 0;
  unsigned hi = 0;

  std::vector<unsigned> values() const;
};

/// Throws InvalidArgument on malformed text or lo > hi.
Range parse_range(const std::string& text);

/// Runs the scx command line. `args` excludes the program name. The expected
/// size formulas used by the verify subcommands can be replaced by a test
/// fixture.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const ExpectedSizes& expected = {});

}  // namespace scx::cli
