#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace knotproj {

// Process exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,   // a verify suite found a counterexample
  kExitUsage = 2,         // malformed input or bad arguments
  kExitNotRealizable = 3, // a word has no embedding in the sphere
  kExitInternal = 4,      // an internal consistency check failed
};

// Runs the command line `args` (program name excluded). Results go to
// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace knotproj
