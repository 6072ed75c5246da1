#pragma once

#include <iosfwd>

namespace kcenter::cli {

/// Exit codes of the kcenter tool.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kParse = 2,
  kValidation = 3,
  kResourceGuard = 4,
  kNumerical = 5,
};

/// Entry point shared by tools/kcenter and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace kcenter::cli
