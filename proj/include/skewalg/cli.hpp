#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace skewalg::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 2,
  kCheckFailed = 3,
  kBoundExceeded = 4,
};

/// Runs one command; `args` excludes the program name. Machine-readable
/// lines on `out` start with "RESULT\t". Diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace skewalg::cli
