#pragma once

#include <cstddef>

// Black-Scholes primitives with unit spot and zero rates, parameterized by
// log-strike k = log K.

namespace levysmile {

[[nodiscard]] double norm_cdf(double x) noexcept;
[[nodiscard]] double norm_pdf(double x) noexcept;

/// Call price; sigma = 0 gives the intrinsic value max(1 - e^k, 0).
[[nodiscard]] double bs_call(double sigma, double k, double T);

/// Out-of-the-money price: the call for k >= 0, the put for k < 0. Computed
/// directly so that deep-OTM values keep full relative precision.
[[nodiscard]] double bs_otm_price(double sigma, double k, double T);

/// Digital call P[S_T >= e^k] = Phi(d2).
[[nodiscard]] double bs_digital(double sigma, double k, double T);

[[nodiscard]] double bs_vega(double sigma, double k, double T);

struct VolQuote {
    double sigma;
    std::size_t iterations;
    double residual;  ///< |bs_call(sigma) - price|
};

/// Inverts bs_call. Throws Error(PriceOutOfBounds) outside
/// (max(1 - e^k, 0), 1) and Error(NoConvergence) when the iteration cap is
/// hit.
[[nodiscard]] VolQuote implied_vol(double price, double k, double T);

/// Same inversion, starting from the out-of-the-money price (put for k < 0).
/// Preferred for k < 0, where the call price carries little information.
[[nodiscard]] VolQuote implied_vol_otm(double otm_price, double k, double T);

}  // namespace levysmile
