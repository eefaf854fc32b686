#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polyspace {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // failed verification or a domain error
inline constexpr int kExitUsage = 2;
inline constexpr int kExitMalformed = 3;

/// Entry point of the `polyspace` command; `args` excludes the program name.
/// Subcommands: verify, table, snf, involution classify, series.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polyspace
