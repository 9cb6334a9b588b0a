#include "levysmile/lee.hpp"

#include "levysmile/asymptotics.hpp"
#include "levysmile/error.hpp"

#include <cmath>
#include <string>

namespace levysmile {

double lee_psi(double x) {
    if (std::isnan(x) || x < 0.0) {
        throw Error(ErrorCode::NegativeArgument, "lee_psi needs x >= 0");
    }
    if (x == 0.0) return 2.0;
    return 2.0 - 4.0 / (1.0 + std::sqrt(1.0 + 1.0 / x));
}

WingReport wing_asymptotes(const ModelSpec& model, double T) {
    if (!(T > 0.0) || !std::isfinite(T)) {
        throw Error(ErrorCode::InvalidParameter, "maturity must be finite and > 0");
    }
    const MomentStrip strip = critical_moments(model);
    if (!strip.lower_bounded || !strip.upper_bounded) {
        throw Error(ErrorCode::UnboundedMoments,
                    std::string(model.name()) + ": moments of all orders are finite");
    }
    if (!(strip.s_plus > 1.0)) {
        throw Error(ErrorCode::MomentExplosion, "wings need s_plus > 1");
    }
    WingReport report{};
    report.psi_right = lee_psi(strip.s_plus - 1.0);
    report.psi_left = lee_psi(-strip.s_minus);
    report.right_asymptote = std::sqrt(report.psi_right / T);
    report.left_asymptote = std::sqrt(report.psi_left / T);
    report.right_steeper = strip.s_plus - 1.0 < -strip.s_minus;

    const double sigma = model.diffusion_sigma();
    if (sigma > 0.0) {
        report.atm_slope_positive = psi(model, Complex{1.0, 0.0}).real() > 0.0;
    } else if (const double b = model.drift(); std::abs(b) > kZeroDriftTolerance) {
        report.atm_slope_positive = b < 0.0;
    }
    if (report.atm_slope_positive) {
        report.equivalent = report.right_steeper == *report.atm_slope_positive;
    }
    return report;
}

EquivalenceReport steepness_equivalence(const ModelSpec& model) {
    if (model.diffusion_sigma() > 0.0) {
        throw Error(ErrorCode::NotApplicable,
                    std::string(model.name()) + ": the equivalence covers pure-jump models");
    }
    if (!model.is_martingale()) {
        throw Error(ErrorCode::NotApplicable, "the equivalence needs the martingale drift");
    }
    const double b = model.drift();
    if (std::abs(b) <= kZeroDriftTolerance) {
        throw Error(ErrorCode::NotApplicable, std::string(model.name()) + ": b = 0");
    }
    const MomentStrip strip = critical_moments(model);

    EquivalenceReport report{};
    report.right_steeper = strip.s_plus - 1.0 < -strip.s_minus;
    report.drift_negative = b < 0.0;
    report.holds = report.right_steeper == report.drift_negative;

    const ModelParams& params = model.params();
    if (const auto* p = std::get_if<CgmyParams>(&params)) {
        report.reduced_condition = p->m - 1.0 < p->g;
        report.reduced_description = "M - 1 < G";
    } else if (const auto* p = std::get_if<VarianceGammaParams>(&params)) {
        report.reduced_condition = 1.0 + 2.0 * p->theta / (p->sigma_vg * p->sigma_vg) > 0.0;
        report.reduced_description = "1 + 2 theta / sigma_vg^2 > 0";
    } else if (const auto* p = std::get_if<NigParams>(&params)) {
        report.reduced_condition = p->beta > -0.5;
        report.reduced_description = "beta > -1/2";
    } else if (const auto* p = std::get_if<MeixnerParams>(&params)) {
        report.reduced_condition = p->a_bar + 2.0 * p->b_bar > 0.0;
        report.reduced_description = "a_bar + 2 b_bar > 0";
    }
    return report;
}

}  // namespace levysmile
