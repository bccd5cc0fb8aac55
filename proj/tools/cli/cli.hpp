#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace transfersys::cli {

enum ExitCode : int {
  kOk = 0,
  kCrossCheckFailed = 1,
  kUsage = 2,
  kFailure = 3,
};

// Runs one command line. Results go to `out`, progress and errors to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace transfersys::cli
