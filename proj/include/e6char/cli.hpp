#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace e6char::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
};

/// Runs the command line `args` (without the program name).
///
/// Environment: E6CHAR_WIDTH sets the text wrap width (default 100),
/// E6CHAR_COLOR=1 colors verify verdicts.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace e6char::cli
