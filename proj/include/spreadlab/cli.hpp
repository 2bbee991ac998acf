#pragma once

#include <string>
#include <vector>

#include "spreadlab/error.hpp"

namespace spreadlab {

namespace exit_code {
inline constexpr int kSuccess = 0;
inline constexpr int kCertificateFailure = 1;
inline constexpr int kParse = 2;
inline constexpr int kNonConvergence = 3;
inline constexpr int kPrecondition = 4;
inline constexpr int kIo = 5;
} // namespace exit_code

[[nodiscard]] int exit_code_for(ErrorCode code) noexcept;

struct CliOutcome {
    int exit_code = exit_code::kSuccess;
    std::string report; // RunReport document (stdout)
    std::string message; // diagnostics or help text (stderr)
};

/// Runs `spreadlab <args...>` in-process; args exclude the program name.
[[nodiscard]] CliOutcome run_cli(const std::vector<std::string>& args);

} // namespace spreadlab
