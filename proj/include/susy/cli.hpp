#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace susy::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one subcommand. `args` excludes the program name. Data goes to `out`
/// (or the file named by --out), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Shortest-safe text form of a double: 17 significant digits, '.' separator.
std::string format_number(double v);

}  // namespace susy::cli
