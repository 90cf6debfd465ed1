#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace scs {

enum ExitCode : int {
  kExitOk = 0,        // success, verdict YES
  kExitNo = 1,        // verdict NO, or a verification failure
  kExitUsage = 2,     // bad arguments or malformed input
  kExitContract = 3,  // internal contract violation
};

/// Runs one command line (program name excluded), writing JSON to `out`
/// and diagnostics to `err`. Returns an ExitCode.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace scs
