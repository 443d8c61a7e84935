// The kpair command line, callable in-process for tests.
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace kpair::cli {

/// Exit codes.
inline constexpr int kPositive = 0;  // verdict holds
inline constexpr int kNegative = 1;  // verdict fails (no certificate, failed pairing, ...)
inline constexpr int kUsage = 2;     // malformed flags or input files

/// args excludes the program name.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kpair::cli
