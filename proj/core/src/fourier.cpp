#include "levysmile/fourier.hpp"

#include "levysmile/error.hpp"

#include <boost/math/tools/minima.hpp>
#include <boost/math/tools/toms748_solve.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <string>

namespace levysmile {
namespace {

constexpr double kPureJumpMinT = 1e-6;
// Largest admissible log of the damped mgf on the real axis; keeps the
// integrand well inside double range and limits cancellation.
constexpr double kMaxDampedLog = 40.0;
constexpr double kContourCap = 20.0;
// When the default contour's integrand peak falls outside this band the
// contour moves to the real-axis saddle point: a small peak means a price far
// out of the money, a large one means cancellation.
constexpr double kSmallPeak = 1e-3;
constexpr double kLargePeak = 1e3;
constexpr double kSaddleReach = 1e4;
constexpr double kEdgeGap = 1e-6;
constexpr double kFirstPanel = 1.0;
// Beyond this half-period the phase is treated as flat.
constexpr double kMaxHalfPeriod = 1e12;
constexpr int kScanSteps = 64;

void check_inputs(double k, double T) {
    if (!(T > 0.0) || !std::isfinite(T)) {
        throw Error(ErrorCode::InvalidParameter, "maturity must be finite and > 0");
    }
    if (!std::isfinite(k)) {
        throw Error(ErrorCode::InvalidParameter, "log-strike must be finite");
    }
}

// Real part of the integrand exponent at s = a, without the 1/s factors.
double damped_log(const ModelSpec& model, Payoff payoff, double k, double T, double a) {
    const double log_m = log_mgf(model, Complex{a, 0.0}, T).real();
    return payoff == Payoff::Digital ? log_m - k * a : log_m + k * (1.0 - a);
}

// Log of the integrand modulus at y = 0.
double log_peak(const ModelSpec& model, Payoff payoff, double k, double T, double a) {
    double value = damped_log(model, payoff, k, T, a) - std::log(std::abs(a));
    if (payoff == Payoff::Call) value -= std::log(std::abs(a - 1.0));
    return value;
}

struct ContourIntegrand {
    const ModelSpec& model;
    Payoff payoff;
    double k;
    double T;
    double a;

    [[nodiscard]] Complex exponent(double y) const {
        const Complex s{a, y};
        Complex L = log_mgf(model, s, T) - std::log(s);
        if (payoff == Payoff::Digital) {
            L -= k * s;
        } else {
            L += k * (1.0 - s) - std::log(s - 1.0);
        }
        return L;
    }

    [[nodiscard]] double value(double y) const {
        return std::exp(exponent(y)).real() / std::numbers::pi;
    }
    [[nodiscard]] double envelope(double y) const {
        return std::exp(exponent(y).real()) / std::numbers::pi;
    }
    [[nodiscard]] double phase(double y) const { return exponent(y).imag(); }
};

// Doubling panels from the origin until they span a half-period of the
// asymptotic oscillation, then panels ending at zeros of the integrand
// (phase = pi/2 mod pi). Without oscillation the doubling goes on for good
// and the geometric tail is accelerated.
class ContourSchedule {
public:
    ContourSchedule(const ContourIntegrand& f, double rate)
        : f_(f), direction_(rate > 0.0 ? 1.0 : -1.0) {
        const double half = std::numbers::pi / std::abs(rate);
        oscillatory_ = std::isfinite(half) && half < kMaxHalfPeriod;
        half_period_ = oscillatory_ ? half : std::numeric_limits<double>::infinity();
    }

    PanelBreak operator()(double x) {
        if (!aligned_) {
            const double end = x == 0.0 ? kFirstPanel : 2.0 * x;
            if (!oscillatory_ || end - x < half_period_) {
                return PanelBreak{end, false, !oscillatory_};
            }
            aligned_ = true;
            retarget(x);
            return PanelBreak{next_zero(x), true, true};
        }
        return PanelBreak{next_zero(x), false, true};
    }

private:
    void retarget(double x) {
        const double theta = f_.phase(x);
        const double pos = (theta - 0.5 * std::numbers::pi) / std::numbers::pi;
        const double m = direction_ > 0.0 ? std::ceil(pos + 0.1) : std::floor(pos - 0.1);
        target_ = 0.5 * std::numbers::pi + m * std::numbers::pi;
    }

    double next_zero(double x) {
        const double step = 0.25 * half_period_;
        auto gap = [&](double y) { return direction_ * (f_.phase(y) - target_); };
        double lo = x;
        double g_lo = gap(lo);
        for (int i = 1; i <= kScanSteps; ++i) {
            const double hi = x + i * step;
            const double g_hi = gap(hi);
            if (g_lo < 0.0 && g_hi >= 0.0) {
                std::uintmax_t iters = 60;
                const auto [left, right] = boost::math::tools::toms748_solve(
                    gap, lo, hi, g_lo, g_hi, boost::math::tools::eps_tolerance<double>(40), iters);
                const double root = 0.5 * (left + right);
                target_ += direction_ * std::numbers::pi;
                if (root > x) return root;
                return hi;
            }
            lo = hi;
            g_lo = g_hi;
        }
        const double end = x + half_period_;
        retarget(end);
        return end;
    }

    const ContourIntegrand& f_;
    double direction_;
    bool oscillatory_ = false;
    double half_period_ = 0.0;
    bool aligned_ = false;
    double target_ = 0.0;
};

IntegralResult integrate_contour(const ModelSpec& model, Payoff payoff, double k, double T, double a,
                                 const QuadratureConfig& cfg) {
    const ContourIntegrand integrand{model, payoff, k, T, a};
    // Tighten the tolerance along with the integrand scale so that deep
    // out-of-the-money prices keep their relative accuracy.
    QuadratureConfig scaled = cfg;
    const double peak = std::exp(std::min(0.0, log_peak(model, payoff, k, T, a)));
    scaled.abs_tol = cfg.abs_tol * std::max(peak, 1e-280);
    const double sigma = model.diffusion_sigma();
    const double rate = T * (model.drift() + sigma * sigma * a) - k;
    ContourSchedule schedule(integrand, rate);
    return sum_panels([&](double y) { return integrand.value(y); }, 0.0,
                      [&](double x) { return schedule(x); }, scaled,
                      [&](double y) { return integrand.envelope(y); });
}

double pick_contour(const ModelSpec& model, Payoff payoff, double k, double T,
                    const QuadratureConfig& cfg) {
    const MomentStrip strip = critical_moments(model);
    if (!cfg.contour_a) return auto_contour(model, payoff, k, T);
    const double a = *cfg.contour_a;
    const double lower_edge = payoff == Payoff::Digital ? 0.0 : 1.0;
    const bool upper_ok = a > lower_edge && a < strip.s_plus;
    const bool lower_ok = a < 0.0 && a > strip.s_minus;
    if (!upper_ok && !lower_ok) {
        throw Error(ErrorCode::StripViolation,
                    "contour a = " + std::to_string(a) + " outside the admissible strip");
    }
    return a;
}

// M(1,T): the residue of the call integrand at s = 1 (1 under the
// martingale drift).
double forward(const ModelSpec& model, double T) {
    return mgf(model, Complex{1.0, 0.0}, T).real();
}

}  // namespace

double auto_contour(const ModelSpec& model, Payoff payoff, double k, double T) {
    check_inputs(k, T);
    const MomentStrip strip = critical_moments(model);
    double a = 0.0;
    double edge = 0.0;
    if (k >= 0.0) {
        edge = payoff == Payoff::Digital ? 0.0 : 1.0;
        a = edge + 0.5 * std::min(strip.s_plus - edge, kContourCap - edge);
    } else {
        a = 0.5 * std::max(strip.s_minus, -kContourCap);
    }
    for (int i = 0; i < 60; ++i) {
        const double excess = damped_log(model, payoff, k, T, a);
        if (std::isfinite(excess) && excess <= kMaxDampedLog) break;
        a = edge + 0.5 * (a - edge);
    }
    const double peak = log_peak(model, payoff, k, T, a);
    if (peak >= std::log(kSmallPeak) && peak <= std::log(kLargePeak)) return a;

    // Real-axis minimum of the (convex) log modulus.
    double lo = 0.0;
    double hi = 0.0;
    if (k >= 0.0) {
        const double top = strip.upper_bounded ? strip.s_plus : edge + kSaddleReach;
        lo = edge + kEdgeGap * std::min(top - edge, 1.0);
        hi = top - 1e-3 * (top - edge);
    } else {
        const double bottom = strip.lower_bounded ? strip.s_minus : -kSaddleReach;
        lo = bottom - 1e-3 * bottom;
        hi = -kEdgeGap * std::min(-bottom, 1.0);
    }
    const auto objective = [&](double x) {
        try {
            const double v = log_peak(model, payoff, k, T, x);
            return std::isfinite(v) ? v : std::numeric_limits<double>::max();
        } catch (const Error&) {
            return std::numeric_limits<double>::max();
        }
    };
    const auto [best, best_value] = boost::math::tools::brent_find_minima(objective, lo, hi, 30);
    return best_value < objective(a) ? best : a;
}

IntegralResult digital_price_result(const ModelSpec& model, double k, double T,
                                    const QuadratureConfig& cfg) {
    check_inputs(k, T);
    cfg.validate();
    if (model.is_pure_jump() && T < kPureJumpMinT) {
        throw Error(ErrorCode::NoConvergence,
                    "pure-jump digital below T = 1e-6 is not resolved by the quadrature");
    }
    const double a = pick_contour(model, Payoff::Digital, k, T, cfg);
    IntegralResult r = integrate_contour(model, Payoff::Digital, k, T, a, cfg);
    // Left of the pole at 0 the integral is P[X_T >= k] - 1.
    if (a < 0.0) r.value += 1.0;
    r.value = std::clamp(r.value, 0.0, 1.0);
    return r;
}

double digital_price(const ModelSpec& model, double k, double T, const QuadratureConfig& cfg) {
    return digital_price_result(model, k, T, cfg).value;
}

IntegralResult call_price_result(const ModelSpec& model, double k, double T,
                                 const QuadratureConfig& cfg) {
    check_inputs(k, T);
    cfg.validate();
    if (!(critical_moments(model).s_plus > 1.0)) {
        throw Error(ErrorCode::MomentExplosion, "call price needs s_plus > 1");
    }
    const double a = pick_contour(model, Payoff::Call, k, T, cfg);
    IntegralResult r = integrate_contour(model, Payoff::Call, k, T, a, cfg);
    // The put contour picks up the residues at 1 and 0.
    if (a < 0.0) r.value += forward(model, T) - std::exp(k);
    r.value = std::max(r.value, std::max(-std::expm1(k), 0.0));
    return r;
}

double call_price(const ModelSpec& model, double k, double T, const QuadratureConfig& cfg) {
    return call_price_result(model, k, T, cfg).value;
}

IntegralResult otm_price_result(const ModelSpec& model, double k, double T,
                                const QuadratureConfig& cfg) {
    check_inputs(k, T);
    cfg.validate();
    if (!(critical_moments(model).s_plus > 1.0)) {
        throw Error(ErrorCode::MomentExplosion, "call price needs s_plus > 1");
    }
    const double a = pick_contour(model, Payoff::Call, k, T, cfg);
    IntegralResult r = integrate_contour(model, Payoff::Call, k, T, a, cfg);
    if (k >= 0.0 && a < 0.0) r.value += forward(model, T) - std::exp(k);
    if (k < 0.0 && a > 0.0) r.value -= forward(model, T) - std::exp(k);
    r.value = std::max(r.value, 0.0);
    return r;
}

double otm_price(const ModelSpec& model, double k, double T, const QuadratureConfig& cfg) {
    return otm_price_result(model, k, T, cfg).value;
}

}  // namespace levysmile
