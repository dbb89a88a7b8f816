#pragma once

#include <ostream>

namespace specfun::cli {

/// Exit statuses of the command-line tool.
enum ExitStatus : int {
  exit_ok = 0,
  exit_verify_failed = 1,
  exit_domain = 2,
  exit_nonconvergence = 3,
  exit_usage = 64,
};

/// Runs the tool with the given argument vector, writing to `out` and `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace specfun::cli
