#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace quivermod::cli {

/// Exit codes of `run`.
inline constexpr int exit_ok = 0;
inline constexpr int exit_mismatch = 1;
inline constexpr int exit_usage = 2;

/// Runs one command line; args[0] is the program name. Results go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quivermod::cli
