#include "spreadlab/error.hpp"

namespace spreadlab {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::NonConvergence: return "NonConvergence";
    case ErrorCode::PerronAnomaly: return "PerronAnomaly";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NegativeEntry: return "NegativeEntry";
    case ErrorCode::EntryOutOfRange: return "EntryOutOfRange";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotDivisibleByThree: return "NotDivisibleByThree";
    case ErrorCode::OrderTooLarge: return "OrderTooLarge";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::CheckFailed: return "CheckFailed";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

} // namespace spreadlab
