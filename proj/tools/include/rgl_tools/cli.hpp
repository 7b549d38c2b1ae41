#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rgl::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;   // not_arrows, or a failed check
inline constexpr int kExitUndecided = 2;  // budget exhausted
inline constexpr int kExitUsage = 64;     // bad flags or unparsable input
inline constexpr int kExitInput = 65;     // precondition or window violation
inline constexpr int kExitInternal = 70;  // invariant failure or counterexample

/// Runs one command line (args[0] is the program name). Reads standard
/// input through `in` when no graph source is given.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace rgl::cli
