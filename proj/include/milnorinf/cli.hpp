#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace milnorinf {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitError = 1,
  kExitParse = 2,
  kExitNotWly = 3,
  kExitNeedsHint = 4,
  kExitHypothesis = 5,
};

/// Runs one command; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace milnorinf
