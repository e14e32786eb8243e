#pragma once

// The modcurve command line: subcommands genus, cusps, rotation, equation,
// group, verify, lift-solve and canonical, with text or JSON output.

#include <iosfwd>
#include <string>
#include <vector>

namespace modcurve::cli {

enum ExitCode : int {
  kSuccess = 0,
  kMismatch = 1,
  kUsage = 2,
  kUnsupported = 3,
};

/// Runs one invocation; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace modcurve::cli
