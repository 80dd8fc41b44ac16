#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace borel {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitViolation = 2;

/// Runs the command line `args` (without the program name).
/// Returns 0 on success, 1 on usage or parse errors, 2 when a bound fails.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace borel
