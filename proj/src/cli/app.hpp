#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gjef::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitViolated = 2;

/// Runs the command line `args` (without the program name). Regular output
/// goes to `out`, diagnostics to `err`; returns the exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gjef::cli
