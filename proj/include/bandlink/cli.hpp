#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bandlink::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kInput = 2,
  kNegative = 3,  // does not percolate, or the bounds leave a gap
  kSearch = 4,    // BudgetExceeded or ConstructionStuck
};

/// Runs one command; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bandlink::cli
