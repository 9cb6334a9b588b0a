#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace levysmile {

enum class ErrorCode {
    InvalidParameter,
    StripViolation,
    BranchCut,
    MomentExplosion,
    UnboundedMoments,
    PriceOutOfBounds,
    NoConvergence,
    NotApplicable,
    DriftNotZero,
    NegativeArgument,
    StepTooSmall,
    AllPointsFailed,
    InvalidInput,
    Overflow,
};

[[nodiscard]] std::string_view to_string(ErrorCode code) noexcept;

/// Numerical errors are the ones a caller may retry with a different
/// quadrature configuration; everything else is an input problem.
[[nodiscard]] bool is_numerical(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace levysmile
