#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qbg {

// Exit codes shared by the CLI and its tests.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitDiscrepant = 2;
inline constexpr int kExitUsage = 64;

// Runs the command-line interface on the given arguments (without the
// program name), writing results to `out` and diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qbg
