#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace repalg::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitInvalidArgs = 2;
/// Largest accepted --cap.
inline constexpr int kMaxCliCap = 8;

/// Runs the command line (args excludes the program name) and returns the
/// exit code. All regular output goes to out, messages to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace repalg::cli
