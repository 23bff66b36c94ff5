#pragma once

#include <iosfwd>

namespace padicw1 {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitPass = 0,
  kExitIdentityFailure = 1,
  kExitPrecondition = 2,
  kExitPrecision = 3,
};

/// Parses argv, runs one subcommand and writes its JSON report to `out` (or
/// the --output file). Diagnostics go to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace padicw1
