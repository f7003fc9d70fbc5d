#ifndef CORESCOPE_CLI_HPP
#define CORESCOPE_CLI_HPP

#include <string>
#include <vector>

namespace corescope {

inline constexpr const char* kToolName = "corescope";
inline constexpr const char* kToolVersion = "0.1.0";

/// Runs one batch subcommand (generate, decompose, stats, sample, verify,
/// compare, report). `args` excludes the program name. Returns the process
/// exit code: 0 success, 1 usage error, 2 data error.
int run_cli(const std::vector<std::string>& args);

}  // namespace corescope

#endif
