#pragma once

#include <string>
#include <vector>

namespace wildcert {

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

/// The full command-line surface, separated from main() so the exit-code
/// contract and byte-level output stability are testable in-process.
/// Exit codes: 0 success/verdict, 1 input error, 2 non-termination,
/// 3 unsupported class or strategy mismatch.
CliResult run_cli(const std::vector<std::string>& args);

}  // namespace wildcert
