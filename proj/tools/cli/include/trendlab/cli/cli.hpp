#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace trendlab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitNumeric = 3;

/// Runs one `trendlab` invocation; `args` excludes the program name.
/// Returns the process exit code: 0 success, 2 bad input, 3 numeric failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// `key = value` lines; blank lines and lines starting with '#' are skipped.
/// Keys are returned with '_' replaced by '-'. Throws InputError naming the
/// line on anything else.
std::vector<std::pair<std::string, std::string>> parse_config(std::istream& in);

}  // namespace trendlab::cli
