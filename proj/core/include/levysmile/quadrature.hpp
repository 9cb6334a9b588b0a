#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

namespace levysmile {

struct QuadratureConfig {
    /// Abscissa of the vertical contour Re(s) = a; nullopt selects it
    /// automatically from the model's strip.
    std::optional<double> contour_a;
    double abs_tol = 1e-10;
    std::size_t max_half_periods = 1'000'000;
    /// Number of extra partial sums entering the Levin transform.
    int acceleration_order = 8;
    /// Gauss-Legendre points per panel.
    int panel_rule = 16;

    /// Throws Error(InvalidParameter) on out-of-range settings.
    void validate() const;
};

struct IntegralResult {
    double value = 0.0;
    double error_estimate = 0.0;
    std::size_t half_periods_used = 0;
    bool accelerated = false;
};

using RealFunction = std::function<double(double)>;

/// n-point Gauss-Legendre rule on [-1, 1].
class GaussLegendre {
public:
    explicit GaussLegendre(int n);

    [[nodiscard]] int size() const noexcept { return static_cast<int>(nodes_.size()); }
    [[nodiscard]] double integrate(const RealFunction& f, double lo, double hi) const;

private:
    std::vector<double> nodes_;
    std::vector<double> weights_;
};

struct PanelEstimate {
    double value;
    double error;
};

/// Gauss-Legendre on [lo, hi], bisecting until the whole-panel and
/// two-halves estimates agree to `tol`.
[[nodiscard]] PanelEstimate adaptive_gauss(const RealFunction& f, double lo, double hi,
                                           const GaussLegendre& rule, double tol);

/// Levin u-transform over a running series. Terms are pushed one by one;
/// `estimate()` returns the transformed limit once enough terms are in.
class LevinAccelerator {
public:
    explicit LevinAccelerator(int order, double offset = 0.0);

    void push(double term);
    [[nodiscard]] std::optional<double> estimate() const;
    [[nodiscard]] double partial_sum() const noexcept { return offset_ + running_; }
    [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }

private:
    int order_;
    double offset_;
    double running_ = 0.0;
    std::vector<double> terms_;
    std::vector<double> sums_;
};

/// Where the next panel ends, and whether it opens a new regime (the
/// acceleration sequence restarts from there). Panels with `accelerate`
/// unset never trigger an accelerated stop.
struct PanelBreak {
    double end;
    bool new_regime = false;
    bool accelerate = true;
};
using PanelSchedule = std::function<PanelBreak(double)>;

/// Sums integrals over consecutive panels [x_n, x_{n+1}] starting at
/// `start`. Stops when the tail is negligible (two small panels and, when
/// given, a small envelope) or when Levin-accelerated partial sums settle.
/// Throws Error(NoConvergence) after cfg.max_half_periods panels.
[[nodiscard]] IntegralResult sum_panels(const RealFunction& f, double start,
                                        const PanelSchedule& schedule, const QuadratureConfig& cfg,
                                        const RealFunction& envelope = {});

/// Improper integral over [0, inf) of an integrand whose oscillation has
/// asymptotic half-period pi (e.g. sin(u)/u times a decaying envelope).
[[nodiscard]] IntegralResult integrate_oscillatory(const RealFunction& f,
                                                   const QuadratureConfig& cfg = {});

}  // namespace levysmile
