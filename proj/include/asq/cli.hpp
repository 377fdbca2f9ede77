#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace asq::cli {

/// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kInternal = 1;
inline constexpr int kUsage = 2;

/// Runs one command. `args` excludes the program name, e.g.
/// {"check", "182", "--format", "json"}. Results go to `out`, diagnostics
/// and progress notes to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace asq::cli
