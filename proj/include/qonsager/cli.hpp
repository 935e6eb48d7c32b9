#pragma once

#include <iosfwd>

namespace qonsager::cli {

/// Exit codes shared by every command.
enum ExitCode : int {
  kAffirmative = 0,
  kNegative = 1,
  kError = 2,
};

/// Entry point of the `qonsager` tool. Subcommands: build, analyze,
/// qstrings, isomorphic, sweep. JSON goes to `out` (or --out PATH), one-line
/// diagnostics to `err`. Nothing is written to the output on error paths.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qonsager::cli
