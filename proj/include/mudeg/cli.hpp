#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mudeg {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitCapExceeded = 2;
inline constexpr int kExitInputError = 3;

/// Runs the command line `args` (without the program name). Results go to
/// `out`, diagnostics and cache notices to `err`. Returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mudeg
