#include "levysmile/blackscholes.hpp"

#include "levysmile/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace levysmile {
namespace {

constexpr double kMinVol = 1e-10;
constexpr double kMaxVol = 1e4;
constexpr std::size_t kMaxIterations = 200;

void check_maturity(double T) {
    if (!(T > 0.0) || !std::isfinite(T)) {
        throw Error(ErrorCode::InvalidParameter, "maturity must be finite and > 0");
    }
}

double intrinsic(double k) { return k < 0.0 ? -std::expm1(k) : 0.0; }

// Upper bound of the OTM price: the forward for calls, the strike for puts.
double otm_ceiling(double k) { return k < 0.0 ? std::exp(k) : 1.0; }

}  // namespace

double norm_cdf(double x) noexcept { return 0.5 * std::erfc(-x * std::numbers::sqrt2 / 2.0); }

double norm_pdf(double x) noexcept {
    return std::exp(-0.5 * x * x) * std::numbers::inv_sqrtpi / std::numbers::sqrt2;
}

double bs_otm_price(double sigma, double k, double T) {
    check_maturity(T);
    if (!(sigma >= 0.0)) {
        throw Error(ErrorCode::InvalidParameter, "volatility must be >= 0");
    }
    if (sigma == 0.0) return 0.0;
    const double v = sigma * std::sqrt(T);
    const double d1 = -k / v + 0.5 * v;
    const double d2 = d1 - v;
    if (k >= 0.0) {
        return std::max(norm_cdf(d1) - std::exp(k) * norm_cdf(d2), 0.0);
    }
    return std::max(std::exp(k) * norm_cdf(-d2) - norm_cdf(-d1), 0.0);
}

double bs_call(double sigma, double k, double T) {
    return intrinsic(k) + bs_otm_price(sigma, k, T);
}

double bs_digital(double sigma, double k, double T) {
    check_maturity(T);
    if (!(sigma >= 0.0)) {
        throw Error(ErrorCode::InvalidParameter, "volatility must be >= 0");
    }
    if (sigma == 0.0) {
        return k < 0.0 ? 1.0 : (k > 0.0 ? 0.0 : 0.5);
    }
    const double v = sigma * std::sqrt(T);
    return norm_cdf(-k / v - 0.5 * v);
}

double bs_vega(double sigma, double k, double T) {
    check_maturity(T);
    if (!(sigma > 0.0)) {
        throw Error(ErrorCode::InvalidParameter, "vega needs volatility > 0");
    }
    const double v = sigma * std::sqrt(T);
    return std::sqrt(T) * norm_pdf(-k / v + 0.5 * v);
}

VolQuote implied_vol(double price, double k, double T) {
    check_maturity(T);
    if (!std::isfinite(price) || !std::isfinite(k)) {
        throw Error(ErrorCode::PriceOutOfBounds, "non-finite price or strike");
    }
    const double floor = intrinsic(k);
    if (price >= 1.0) {
        throw Error(ErrorCode::PriceOutOfBounds, "price " + std::to_string(price) + " >= forward");
    }
    // Rounding may put a tiny time value a few ulps below intrinsic.
    const double slack = 4.0 * std::numeric_limits<double>::epsilon() * std::max(floor, 1e-300);
    if (price < floor - slack) {
        throw Error(ErrorCode::PriceOutOfBounds, "price below intrinsic value");
    }
    const double otm = k < 0.0 ? price - floor : price;
    VolQuote quote = implied_vol_otm(std::max(otm, 0.0), k, T);
    quote.residual = std::abs(bs_call(quote.sigma, k, T) - price);
    return quote;
}

VolQuote implied_vol_otm(double otm_price, double k, double T) {
    check_maturity(T);
    if (!std::isfinite(otm_price) || otm_price < 0.0 || otm_price >= otm_ceiling(k)) {
        throw Error(ErrorCode::PriceOutOfBounds,
                    "out-of-the-money price " + std::to_string(otm_price) + " outside bounds");
    }
    auto residual = [&](double sigma) { return std::abs(bs_otm_price(sigma, k, T) - otm_price); };

    // Zero time value: any vol small enough reproduces it; report the
    // smallest one the solver brackets.
    if (otm_price == 0.0) {
        return VolQuote{kMinVol, 0, residual(kMinVol)};
    }

    double lo = kMinVol;
    while (bs_otm_price(lo, k, T) >= otm_price) {
        lo *= 1e-3;
        if (lo < 1e-300) {
            return VolQuote{lo, 0, residual(lo)};
        }
    }
    double hi = 10.0;
    while (bs_otm_price(hi, k, T) < otm_price) {
        hi *= 2.0;
        if (hi > kMaxVol) {
            throw Error(ErrorCode::NoConvergence, "implied vol above " + std::to_string(kMaxVol));
        }
    }

    // Start at the vega maximum in sigma (sigma^2 T = 2|k|), where the price
    // switches from convex to concave in sigma.
    double sigma = k != 0.0 ? std::sqrt(2.0 * std::abs(k) / T)
                            : std::sqrt(2.0 * std::numbers::pi / T) * otm_price;
    if (!(sigma > lo && sigma < hi)) sigma = std::sqrt(lo * hi);

    const double log_target = std::log(otm_price);
    for (std::size_t iter = 1; iter <= kMaxIterations; ++iter) {
        const double value = bs_otm_price(sigma, k, T);
        if (value == otm_price ||
            (value > 0.0 && std::abs(std::log(value) - log_target) <= 1e-15)) {
            return VolQuote{sigma, iter, residual(sigma)};
        }
        (value < otm_price ? lo : hi) = sigma;

        // Newton on log(price): nearly linear in the deep wings.
        double next = std::sqrt(lo * hi);
        if (value > 0.0) {
            const double ratio = bs_vega(sigma, k, T) / value;
            if (ratio > 0.0 && std::isfinite(ratio)) {
                const double candidate = sigma - (std::log(value) - log_target) / ratio;
                if (candidate > lo && candidate < hi) next = candidate;
            }
        }
        if (std::abs(next - sigma) <= 4.0 * std::numeric_limits<double>::epsilon() * sigma ||
            hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * hi) {
            return VolQuote{next, iter, residual(next)};
        }
        sigma = next;
    }
    throw Error(ErrorCode::NoConvergence, "implied vol iteration cap reached");
}

}  // namespace levysmile
