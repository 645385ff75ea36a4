#pragma once

#include <iosfwd>

namespace qwatson {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitUsage = 2, kExitDegenerate = 3 };

/// Entry point for `qwatson list|verify|eval`. Writes regular output to
/// `out` and diagnostics to `err`; returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qwatson
