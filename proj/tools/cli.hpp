#pragma once

#include <iosfwd>

namespace omnihex::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kNotConverged = 2,
  kNonFinite = 3,
  kUsage = 64,
  kDegenerate = 65,
};

/// Entry point of the `omnihex` tool with injectable streams, so tests can
/// drive it in-process. Returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace omnihex::cli
