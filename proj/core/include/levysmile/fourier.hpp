#pragma once

#include "levysmile/models.hpp"
#include "levysmile/quadrature.hpp"

// Digital and vanilla prices from the mgf by integration along a vertical
// contour Re(s) = a. Unit spot, zero rates, log-strike k.

namespace levysmile {

enum class Payoff { Digital, Call };

/// Contour picked when cfg.contour_a is unset. Digitals use a in (0, s_plus)
/// for k >= 0 and a in (s_minus, 0) for k < 0; calls use (1, s_plus) for
/// k >= 0 and the put contour (s_minus, 0) for k < 0. The abscissa is pulled
/// toward the admissible boundary when the damped mgf would be too large.
[[nodiscard]] double auto_contour(const ModelSpec& model, Payoff payoff, double k, double T);

/// P[X_T >= k]. An explicit contour must lie in (0, s_plus) or (s_minus, 0);
/// anything else throws Error(StripViolation). Pure-jump models with
/// T < 1e-6 throw Error(NoConvergence).
[[nodiscard]] IntegralResult digital_price_result(const ModelSpec& model, double k, double T,
                                                  const QuadratureConfig& cfg = {});
[[nodiscard]] double digital_price(const ModelSpec& model, double k, double T,
                                   const QuadratureConfig& cfg = {});

/// E[(e^{X_T} - e^k)^+]. An explicit contour must lie in (1, s_plus) or
/// (s_minus, 0) (the latter prices the put and adds parity). Throws
/// Error(MomentExplosion) when s_plus <= 1.
[[nodiscard]] IntegralResult call_price_result(const ModelSpec& model, double k, double T,
                                               const QuadratureConfig& cfg = {});
[[nodiscard]] double call_price(const ModelSpec& model, double k, double T,
                                const QuadratureConfig& cfg = {});

/// Out-of-the-money price: the call for k >= 0, the put for k < 0.
[[nodiscard]] IntegralResult otm_price_result(const ModelSpec& model, double k, double T,
                                              const QuadratureConfig& cfg = {});
[[nodiscard]] double otm_price(const ModelSpec& model, double k, double T, const QuadratureConfig& cfg = {});

}  // namespace levysmile
