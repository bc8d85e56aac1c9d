#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hbcast::cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInvalid = 2;

/// Runs the hbcast command line with `args` (program name excluded), writing reports to
/// `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hbcast::cli
