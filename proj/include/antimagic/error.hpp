#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace antimagic {

enum class ErrorCode {
    SyntaxError,
    CycleDetected,
    DuplicateEdge,
    SelfLoop,
    RootNotInComponent,
    SingleComponent,
    CorrespondenceMismatch,
    SizeTooSmall,
    SizeSumMismatch,
    UnsatisfiableConstraint,
    SizeMismatch,
    ConflictingReservation,
    IneligibleForest,
    RepairExhausted,
    NotABijection,
    TooLarge,
    InfeasibleSpec,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::CycleDetected: return "CycleDetected";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::RootNotInComponent: return "RootNotInComponent";
    case ErrorCode::SingleComponent: return "SingleComponent";
    case ErrorCode::CorrespondenceMismatch: return "CorrespondenceMismatch";
    case ErrorCode::SizeTooSmall: return "SizeTooSmall";
    case ErrorCode::SizeSumMismatch: return "SizeSumMismatch";
    case ErrorCode::UnsatisfiableConstraint: return "UnsatisfiableConstraint";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::ConflictingReservation: return "ConflictingReservation";
    case ErrorCode::IneligibleForest: return "IneligibleForest";
    case ErrorCode::RepairExhausted: return "RepairExhausted";
    case ErrorCode::NotABijection: return "NotABijection";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::InfeasibleSpec: return "InfeasibleSpec";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace antimagic
