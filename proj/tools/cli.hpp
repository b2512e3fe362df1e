#pragma once

#include <ostream>
#include <span>
#include <string>

namespace elliptic::cli {

enum ExitCode : int {
  exit_ok = 0,
  exit_statistical_failure = 1,
  exit_usage = 2,
  exit_capacity = 3,
};

/// Runs one invocation. `args` excludes the program name.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace elliptic::cli
