#pragma once

// Command-line front end: eval, laurent, check and sn subcommands.
// Exit codes: 0 success, 1 usage or domain error, 2 accuracy target missed
// (or, for `check`, a failed property).

#include <iosfwd>
#include <string>
#include <vector>

namespace hurwitz::cli {

inline constexpr const char* kVersion = "0.1.0";
/// Overrides the default of 30 requested digits.
inline constexpr const char* kDigitsEnv = "HURWITZ_DIGITS";

enum ExitCode { kExitOk = 0, kExitUsage = 1, kExitAccuracy = 2 };

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hurwitz::cli
