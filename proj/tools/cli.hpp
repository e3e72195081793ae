#pragma once

// Command-line front end: decay, goodlambda, lerner, weights, cf, dominate, suite.
// Exit codes: 0 success, 1 a check failed, 2 configuration error.

#include <iosfwd>
#include <string>
#include <vector>

namespace czlab::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_check_failed = 1;
inline constexpr int exit_config_error = 2;

/// Runs one command line; reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace czlab::cli
