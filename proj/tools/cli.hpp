#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qfock::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one subcommand. args excludes the program name. Exit status:
/// 0 success, 1 a check reported a nonzero defect, 2 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qfock::cli
