#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace vlang::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;  // violations or a failed verdict
inline constexpr int kExitUsage = 2;     // bad arguments or unreadable files

/// Runs one command line. `args` excludes the program name. Results go to
/// `out`, diagnostics to `err`; `color` enables ANSI escapes on `err`.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err, bool color = false);

}  // namespace vlang::cli
