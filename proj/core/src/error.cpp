#include "levysmile/error.hpp"

namespace levysmile {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InvalidParameter: return "InvalidParameter";
        case ErrorCode::StripViolation: return "StripViolation";
        case ErrorCode::BranchCut: return "BranchCut";
        case ErrorCode::MomentExplosion: return "MomentExplosion";
        case ErrorCode::UnboundedMoments: return "UnboundedMoments";
        case ErrorCode::PriceOutOfBounds: return "PriceOutOfBounds";
        case ErrorCode::NoConvergence: return "NoConvergence";
        case ErrorCode::NotApplicable: return "NotApplicable";
        case ErrorCode::DriftNotZero: return "DriftNotZero";
        case ErrorCode::NegativeArgument: return "NegativeArgument";
        case ErrorCode::StepTooSmall: return "StepTooSmall";
        case ErrorCode::AllPointsFailed: return "AllPointsFailed";
        case ErrorCode::InvalidInput: return "InvalidInput";
        case ErrorCode::Overflow: return "Overflow";
    }
    return "Unknown";
}

bool is_numerical(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::NoConvergence:
        case ErrorCode::StepTooSmall:
        case ErrorCode::AllPointsFailed:
        case ErrorCode::Overflow:
        case ErrorCode::PriceOutOfBounds:
            return true;
        default:
            return false;
    }
}

}  // namespace levysmile
