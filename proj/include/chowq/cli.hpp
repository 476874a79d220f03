#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chowq {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMalformed = 1;
inline constexpr int kExitHypothesis = 2;

/// Runs the command line `args` (without the program name).
/// Exit codes: 0 success, 2 hypothesis or certificate failure with the report
/// still written, 1 malformed input or any other error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chowq
