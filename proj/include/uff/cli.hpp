#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace uff::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitUnknown = 2;
inline constexpr int kExitUsage = 64;

/// Runs one invocation. `args` excludes the program name. Reports go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace uff::cli
