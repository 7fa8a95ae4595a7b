#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rosette {

// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;        // bad arguments, unreadable or malformed curve file
inline constexpr int kExitNotRosette = 2;   // radius of curvature not positive everywhere
inline constexpr int kExitDegenerate = 3;   // non-generic input defeated a requested count/assertion

/// Runs one command. `args` excludes the program name. Reports (JSON) go to
/// `out`, diagnostics to `err`; SVG goes to --out when given, else to `out`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rosette
