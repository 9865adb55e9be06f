#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sforge::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of the stirling-forge command line.  `args` excludes the
/// program name.  Returns 0 on success, 1 on a failed verification or a
/// method disagreement, 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sforge::cli
