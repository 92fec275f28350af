#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace divcrit::cli {

/// Exit codes: 0 affirmative/clean, 1 negative/findings, 2 usage or input error.
inline constexpr int kExitYes = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitUsage = 2;

/// Runs `divcrit <args...>`; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace divcrit::cli
