#include "levysmile/quadrature.hpp"

#include "levysmile/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace levysmile {

void QuadratureConfig::validate() const {
    if (!(abs_tol > 0.0) || !std::isfinite(abs_tol)) {
        throw Error(ErrorCode::InvalidParameter, "abs_tol must be > 0");
    }
    if (max_half_periods == 0) {
        throw Error(ErrorCode::InvalidParameter, "max_half_periods must be positive");
    }
    if (acceleration_order < 1 || acceleration_order > 30) {
        throw Error(ErrorCode::InvalidParameter, "acceleration_order must lie in [1, 30]");
    }
    if (panel_rule < 2 || panel_rule > 128) {
        throw Error(ErrorCode::InvalidParameter, "panel_rule must lie in [2, 128]");
    }
    if (contour_a && !std::isfinite(*contour_a)) {
        throw Error(ErrorCode::InvalidParameter, "contour_a must be finite");
    }
}

GaussLegendre::GaussLegendre(int n) : nodes_(static_cast<std::size_t>(n)), weights_(nodes_.size()) {
    if (n < 1) {
        throw Error(ErrorCode::InvalidParameter, "Gauss-Legendre rule needs at least one node");
    }
    // Newton on P_n from the Tricomi initial guesses; nodes are symmetric.
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (int j = 2; j <= n; ++j) {
                const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            if (n == 1) p0 = 1.0;
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes_[static_cast<std::size_t>(i)] = -x;
        nodes_[static_cast<std::size_t>(n - 1 - i)] = x;
        weights_[static_cast<std::size_t>(i)] = w;
        weights_[static_cast<std::size_t>(n - 1 - i)] = w;
    }
    if (n == 1) {
        nodes_[0] = 0.0;
        weights_[0] = 2.0;
    }
}

double GaussLegendre::integrate(const RealFunction& f, double lo, double hi) const {
    const double half = 0.5 * (hi - lo);
    const double mid = 0.5 * (hi + lo);
    double sum = 0.0;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        sum += weights_[i] * f(mid + half * nodes_[i]);
    }
    return half * sum;
}

namespace {

constexpr int kMaxBisectionDepth = 30;

// `floor` is the round-off level of the sub-interval; asking for less only
// burns evaluations.
PanelEstimate refine(const RealFunction& f, double lo, double hi, double whole,
                     const GaussLegendre& rule, double tol, double floor, int depth) {
    const double mid = 0.5 * (lo + hi);
    const double left = rule.integrate(f, lo, mid);
    const double right = rule.integrate(f, mid, hi);
    const double halves = left + right;
    const double diff = std::abs(halves - whole);
    if (diff <= std::max(tol, floor) || depth >= kMaxBisectionDepth || !(mid > lo && mid < hi)) {
        return {halves, diff};
    }
    const PanelEstimate a = refine(f, lo, mid, left, rule, 0.5 * tol, 0.5 * floor, depth + 1);
    const PanelEstimate b = refine(f, mid, hi, right, rule, 0.5 * tol, 0.5 * floor, depth + 1);
    return {a.value + b.value, a.error + b.error};
}

}  // namespace

PanelEstimate adaptive_gauss(const RealFunction& f, double lo, double hi, const GaussLegendre& rule,
                             double tol) {
    const double whole = rule.integrate(f, lo, hi);
    const double magnitude = rule.integrate([&](double x) { return std::abs(f(x)); }, lo, hi);
    const double floor = 64.0 * std::numeric_limits<double>::epsilon() * magnitude;
    return refine(f, lo, hi, whole, rule, tol, floor, 0);
}

LevinAccelerator::LevinAccelerator(int order, double offset) : order_(order), offset_(offset) {}

void LevinAccelerator::push(double term) {
    running_ += term;
    terms_.push_back(term);
    sums_.push_back(offset_ + running_);
}

std::optional<double> LevinAccelerator::estimate() const {
    const auto count = static_cast<int>(terms_.size());
    const int k = order_;
    if (count < k + 1) return std::nullopt;
    const int n = count - 1 - k;
    constexpr double beta = 1.0;

    double num = 0.0;
    double den = 0.0;
    double binom = 1.0;
    for (int j = 0; j <= k; ++j) {
        const auto m = static_cast<std::size_t>(n + j);
        const double omega = (static_cast<double>(m) + beta) * terms_[m];
        if (omega == 0.0 || !std::isfinite(omega)) return std::nullopt;
        const double ratio = (n + j + beta) / (n + k + beta);
        const double weight = (j % 2 == 0 ? 1.0 : -1.0) * binom * std::pow(ratio, k - 1) / omega;
        num += weight * sums_[m];
        den += weight;
        binom = binom * (k - j) / (j + 1.0);
    }
    if (den == 0.0 || !std::isfinite(num / den)) return std::nullopt;
    return num / den;
}

IntegralResult sum_panels(const RealFunction& f, double start, const PanelSchedule& schedule,
                          const QuadratureConfig& cfg, const RealFunction& envelope) {
    cfg.validate();
    const GaussLegendre rule(cfg.panel_rule);
    const double tol = cfg.abs_tol;
    const double small = 0.05 * tol;

    double total = 0.0;
    double x = start;
    double prev_term = std::numeric_limits<double>::infinity();
    LevinAccelerator levin(cfg.acceleration_order, 0.0);
    double prev_estimate = std::numeric_limits<double>::quiet_NaN();
    double prev_increment = std::numeric_limits<double>::infinity();

    for (std::size_t n = 0; n < cfg.max_half_periods; ++n) {
        const PanelBreak next = schedule(x);
        if (!(next.end > x) || !std::isfinite(next.end)) {
            throw Error(ErrorCode::NoConvergence, "panel schedule stalled at x = " + std::to_string(x));
        }
        if (next.new_regime) {
            levin = LevinAccelerator(cfg.acceleration_order, total);
            prev_estimate = std::numeric_limits<double>::quiet_NaN();
            prev_increment = std::numeric_limits<double>::infinity();
        }
        const double term = adaptive_gauss(f, x, next.end, rule, 0.01 * tol).value;
        if (!std::isfinite(term)) {
            throw Error(ErrorCode::Overflow, "non-finite integrand on [" + std::to_string(x) + ", " +
                                                 std::to_string(next.end) + "]");
        }
        total += term;
        levin.push(term);

        const double width = next.end - x;
        x = next.end;

        const bool envelope_small = !envelope || envelope(x) * width <= small;
        if (std::abs(term) <= small && std::abs(prev_term) <= small && envelope_small) {
            return IntegralResult{total, std::abs(term) + std::abs(prev_term), n + 1, false};
        }
        prev_term = term;

        if (next.accelerate && levin.size() >= static_cast<std::size_t>(cfg.acceleration_order) + 3) {
            if (const auto estimate = levin.estimate()) {
                if (!std::isnan(prev_estimate)) {
                    const double increment = std::abs(*estimate - prev_estimate);
                    if (10.0 * increment <= tol && 10.0 * prev_increment <= tol) {
                        return IntegralResult{*estimate, 10.0 * increment, n + 1, true};
                    }
                    prev_increment = increment;
                }
                prev_estimate = *estimate;
            }
        }
    }
    throw Error(ErrorCode::NoConvergence,
                "oscillatory tail not converged after " + std::to_string(cfg.max_half_periods) +
                    " panels");
}

IntegralResult integrate_oscillatory(const RealFunction& f, const QuadratureConfig& cfg) {
    const PanelSchedule half_periods = [](double x) {
        const double index = std::round(x / std::numbers::pi);
        return PanelBreak{(index + 1.0) * std::numbers::pi, x == 0.0};
    };
    return sum_panels(f, 0.0, half_periods, cfg);
}

}  // namespace levysmile
