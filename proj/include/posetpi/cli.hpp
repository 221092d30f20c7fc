#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace posetpi::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_input_error = 1;
inline constexpr int exit_check_failed = 2;

/// Runs one command. `args` excludes the program name. Returns 0 on a
/// computed result (inconclusive verdicts included), 1 on bad input and 2
/// when an internal cross-check fails.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace posetpi::cli
