#pragma once

#include <ostream>

namespace kaj::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitFormat = 2,  // also I/O failures
  kExitIntegrity = 3,
};

/// Runs the `kaj` command line. Results go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace kaj::cli
