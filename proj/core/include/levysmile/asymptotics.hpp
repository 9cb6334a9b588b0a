#pragma once

#include "levysmile/models.hpp"
#include "levysmile/quadrature.hpp"

#include <string_view>

// Small-maturity behaviour of at-the-money digitals and implied-volatility
// slopes.

namespace levysmile {

/// How the slope scales as T -> 0.
enum class SlopeOrder { Constant, InverseSqrtT, SqrtT };

[[nodiscard]] std::string_view to_string(SlopeOrder order) noexcept;

struct SlopeEstimate {
    double value;  ///< slope per unit log-strike, evaluated at the given T
    SlopeOrder order;
    std::string_view formula_id;
};

enum class DigitalLimitCase {
    JumpDiffusion,     ///< Brownian part present: 1/2
    DriftDominated,    ///< eta < 1 or finite variation: (1 + sign b) / 2
    Balanced,          ///< eta = 1: 1/2 + arctan(b / c1) / pi
    JumpDominated,     ///< eta > 1: 1/2
};

[[nodiscard]] std::string_view to_string(DigitalLimitCase c) noexcept;

struct DigitalLimit {
    double value;
    DigitalLimitCase limit_case;
};

/// Drifts below this in magnitude count as zero.
inline constexpr double kZeroDriftTolerance = 1e-12;

/// Exact bridge between the ATM digital and the ATM implied-volatility slope:
/// (Phi(-v/2) - digital) / (sqrt(T) n(v/2)) with v = atm_vol sqrt(T).
[[nodiscard]] double slope_from_digital(double digital, double atm_vol, double T);

/// lim_{T->0} P[X_T >= 0]. Throws Error(NotApplicable) for pure-jump
/// models with zero drift.
[[nodiscard]] DigitalLimit digital_limit(const ModelSpec& model);

/// 1/2 + sign(b)/pi * int_0^inf exp(-c1 T^(1-eta) (u/|b|)^eta) sin(u)/u du,
/// the T-dependent integral whose T -> 0 limit is the ATM digital limit.
[[nodiscard]] double digital_limit_oracle(const PowerLawProfile& profile, double b, double T,
                                          const QuadratureConfig& cfg = {});

/// Second-order ATM digital: 1/2 + b sqrt(T) / (sigma sqrt(2 pi)) for jump
/// diffusions, 1/2 - (T/nu) log(s_plus sigma_vg sqrt(nu/2)) for variance
/// gamma with zero drift. T = 0 is accepted. Other models throw
/// Error(NotApplicable).
[[nodiscard]] double digital_expansion(const ModelSpec& model, double T);

/// Leading ATM implied volatility of variance gamma with zero drift:
/// sqrt(2 pi T) / nu * log(s_plus / (s_plus - 1)). Throws
/// Error(DriftNotZero) when |b| > kZeroDriftTolerance.
[[nodiscard]] double vg_atm_vol_b0(const ModelSpec& model, double T);

/// Leading-order ATM implied-volatility slope at maturity T. Needs the
/// martingale drift; pure-jump models other than variance gamma need b != 0.
[[nodiscard]] SlopeEstimate atm_slope_asymptotic(const ModelSpec& model, double T);

}  // namespace levysmile
