#pragma once

#include <ostream>

namespace latcover::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;    // a verification check failed
inline constexpr int kExitError = 2;     // runtime error: bad input file, exhausted forcing list
inline constexpr int kExitUsage = 64;    // unknown flag or malformed arguments

// Runs the command line and returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace latcover::cli
