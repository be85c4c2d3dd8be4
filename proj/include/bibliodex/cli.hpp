#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bibliodex::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_data_error = 1;
inline constexpr int exit_usage_error = 2;

/// Runs one subcommand. Data rows go to `out`, diagnostics to `err`
/// (one line each, prefixed `error[data]:` or `error[usage]:`).
/// Output is byte-identical for identical inputs, flags and seed.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace bibliodex::cli
