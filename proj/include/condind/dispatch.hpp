#pragma once

#include <string>
#include <vector>

namespace condind {

/// 0 success, 1 counterexample or alarm, 2 validation error, 3 internal error.
enum ExitCode : int { kExitOk = 0, kExitCounterexample = 1, kExitValidation = 2, kExitInternal = 3 };

struct RunResult {
  int exit_code = kExitOk;
  /// The report (JSON or text); on failure the diagnostic.
  std::string output;
};

/// Runs one command line (without the program name), e.g.
/// {"apply", "--indicator", "esssup", "--sigma", "H", "--var", "X"}.
/// Never throws.
RunResult dispatch(const std::vector<std::string>& args);

}  // namespace condind
