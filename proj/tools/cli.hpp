#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace melzak::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

inline constexpr unsigned long kTableCeiling = 200;
inline constexpr unsigned long kBenchCeiling = 5000;

// Runs the tool on `args` (without the program name), writing results to
// `out` and diagnostics to `err`. Returns the process exit code.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace melzak::cli
