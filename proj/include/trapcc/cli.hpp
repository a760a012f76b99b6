#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace trapcc::cli {

inline constexpr const char* kToolName = "trapcc";
inline constexpr const char* kVersion = "0.1.0";

// Process exit codes.
enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kDegenerate = 2,
  kCollision = 3,
  kUsage = 64,
  kRefusedUnphysical = 65,
  kIoError = 74,
};

// Shortest round-trip decimal form ("nan", "inf" for non-finite values).
std::string format_double(double value);

// Runs one command line. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace trapcc::cli
