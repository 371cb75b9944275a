#ifndef STABKIT_TOOLS_CLI_HPP
#define STABKIT_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace stabkit::cli {

inline constexpr const char* kToolVersion = "stabkit 0.1.0";

/// Exit codes: 0 pass, 1 refuted or failed check, 2 input error.
enum ExitCode { kPass = 0, kRefuted = 1, kInputError = 2 };

/// Runs one command; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stabkit::cli

#endif  // STABKIT_TOOLS_CLI_HPP
