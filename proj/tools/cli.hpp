#ifndef SSBM_TOOLS_CLI_HPP
#define SSBM_TOOLS_CLI_HPP

#include <string>
#include <vector>

namespace ssbm::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitIo = 2;
/// `check` ran to completion but at least one inequality failed.
inline constexpr int kExitInequalityFailed = 3;

/// Runs the command line. args[0] is the program name.
int run(const std::vector<std::string>& args);

}  // namespace ssbm::cli

#endif  // SSBM_TOOLS_CLI_HPP
