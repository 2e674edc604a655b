#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tailmatch {

// Exit statuses of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitPrecondition = 1;
inline constexpr int kExitConsistency = 2;
inline constexpr int kExitUsage = 64;

/// Runs one CLI invocation. args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tailmatch
