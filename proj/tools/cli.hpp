#ifndef HYPERLAG_TOOLS_CLI_HPP
#define HYPERLAG_TOOLS_CLI_HPP

#include <iosfwd>

namespace hyperlag::cli {

/// Exit codes: 0 success, 1 verification failure or bound violation,
/// 2 malformed input or flags.
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kUsage = 2;

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hyperlag::cli

#endif  // HYPERLAG_TOOLS_CLI_HPP
