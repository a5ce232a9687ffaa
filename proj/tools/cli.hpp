#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace modgroup::cli {

// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kAssertionFailed = 1;
inline constexpr int kUsage = 2;
inline constexpr int kResource = 3;

/// Runs the command line `args` (without the program name). Output goes to
/// `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace modgroup::cli
