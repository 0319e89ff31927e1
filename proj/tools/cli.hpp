#pragma once

#include <iosfwd>

namespace pantsgraph::cli {

enum ExitCode { kOk = 0, kCheckFailed = 1, kUsage = 2, kBudget = 3 };

/// Runs the command line; output goes to `out` unless --out is given.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pantsgraph::cli
