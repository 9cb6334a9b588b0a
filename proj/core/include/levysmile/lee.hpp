#pragma once

#include "levysmile/models.hpp"

#include <optional>
#include <string>

// Large-strike wings from the critical moments.

namespace levysmile {

/// Psi(x) = 2 - 4 (sqrt(x^2 + x) - x), evaluated as 2 - 4 / (1 + sqrt(1 + 1/x)).
/// Throws Error(NegativeArgument) for x < 0.
[[nodiscard]] double lee_psi(double x);

struct WingReport {
    double psi_right;        ///< Psi(s_plus - 1)
    double psi_left;         ///< Psi(-s_minus)
    double right_asymptote;  ///< sqrt(psi_right / T), coefficient of sqrt(k)
    double left_asymptote;   ///< sqrt(psi_left / T), coefficient of sqrt(-k)
    bool right_steeper;
    /// Sign of the small-maturity ATM slope; empty for pure-jump models
    /// with zero drift.
    std::optional<bool> atm_slope_positive;
    std::optional<bool> equivalent;
};

/// Throws Error(UnboundedMoments) unless both critical moments are finite,
/// and Error(MomentExplosion) when s_plus <= 1.
[[nodiscard]] WingReport wing_asymptotes(const ModelSpec& model, double T);

struct EquivalenceReport {
    bool holds;          ///< right_steeper == drift_negative
    bool right_steeper;  ///< s_plus - 1 < -s_minus
    bool drift_negative;
    /// The model-specific parameter condition equivalent to right_steeper.
    bool reduced_condition;
    std::string reduced_description;
};

/// Pure-jump models with the martingale drift and b != 0 only; anything
/// else throws Error(NotApplicable).
[[nodiscard]] EquivalenceReport steepness_equivalence(const ModelSpec& model);

}  // namespace levysmile
