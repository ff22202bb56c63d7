#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dualkit::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kFailed = 1;  ///< a requested verification did not hold
inline constexpr int kUsage = 2;   ///< bad flags, unknown names, malformed input

/// Runs one command line (without the program name). JSON or CSV goes to
/// out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dualkit::cli
