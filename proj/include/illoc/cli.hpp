#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace illoc::cli {

enum ExitCode : int {
  kOk = 0,
  kRefuted = 1,
  kParseError = 2,
  kSemanticError = 3,
  kBudgetExceeded = 4,
};

// Runs the `illoc` command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace illoc::cli
