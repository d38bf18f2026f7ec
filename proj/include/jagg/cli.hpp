#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace jagg {

enum ExitCode : int {
  kExitTrue = 0,
  kExitFalse = 1,
  kExitUndecided = 2,
  kExitUsage = 64,
  kExitData = 65,
};

// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jagg
