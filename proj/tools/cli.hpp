#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cd::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kNumeric = 2;
inline constexpr int kDomain = 3;
inline constexpr int kPropertyFailure = 4;

/// Runs one command; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cd::cli
