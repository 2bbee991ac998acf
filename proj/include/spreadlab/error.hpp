#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace spreadlab {

enum class ErrorCode {
    NonConvergence,
    PerronAnomaly,
    NotSymmetric,
    NegativeEntry,
    EntryOutOfRange,
    DimensionMismatch,
    NotDivisibleByThree,
    OrderTooLarge,
    DomainError,
    CheckFailed,
    InvalidArgument,
    ParseError,
    IoError,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace spreadlab
