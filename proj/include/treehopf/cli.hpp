#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace treehopf::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kParse = 2,
  kVerification = 3,
  kBudget = 4,
  kColour = 5,
};

/// Runs one invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace treehopf::cli
