#include "levysmile/asymptotics.hpp"

#include "levysmile/blackscholes.hpp"
#include "levysmile/error.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace levysmile {
namespace {

const double kSqrtTwoPi = std::sqrt(2.0 * std::numbers::pi);

void check_maturity(double T, bool allow_zero = false) {
    const bool ok = allow_zero ? T >= 0.0 : T > 0.0;
    if (!ok || !std::isfinite(T)) {
        throw Error(ErrorCode::InvalidParameter,
                    allow_zero ? "maturity must be finite and >= 0" : "maturity must be finite and > 0");
    }
}

double sign(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }

bool zero_drift(double b) { return std::abs(b) <= kZeroDriftTolerance; }

const VarianceGammaParams* as_vg(const ModelSpec& model) {
    return std::get_if<VarianceGammaParams>(&model.params());
}

}  // namespace

std::string_view to_string(SlopeOrder order) noexcept {
    switch (order) {
        case SlopeOrder::Constant: return "constant";
        case SlopeOrder::InverseSqrtT: return "inverse-sqrt-T";
        case SlopeOrder::SqrtT: return "sqrt-T";
    }
    return "unknown";
}

std::string_view to_string(DigitalLimitCase c) noexcept {
    switch (c) {
        case DigitalLimitCase::JumpDiffusion: return "jump-diffusion";
        case DigitalLimitCase::DriftDominated: return "drift-dominated";
        case DigitalLimitCase::Balanced: return "balanced";
        case DigitalLimitCase::JumpDominated: return "jump-dominated";
    }
    return "unknown";
}

double slope_from_digital(double digital, double atm_vol, double T) {
    check_maturity(T);
    if (!(digital >= 0.0 && digital <= 1.0)) {
        throw Error(ErrorCode::InvalidParameter, "digital price must lie in [0, 1]");
    }
    if (!(atm_vol >= 0.0) || !std::isfinite(atm_vol)) {
        throw Error(ErrorCode::InvalidParameter, "ATM volatility must be finite and >= 0");
    }
    const double half_v = 0.5 * atm_vol * std::sqrt(T);
    return (norm_cdf(-half_v) - digital) / (std::sqrt(T) * norm_pdf(half_v));
}

DigitalLimit digital_limit(const ModelSpec& model) {
    const AsymptoticProfile profile = asymptotic_profile(model);
    if (std::holds_alternative<JumpDiffusionProfile>(profile.kind)) {
        return {0.5, DigitalLimitCase::JumpDiffusion};
    }
    const double b = profile.drift_b;
    if (zero_drift(b)) {
        throw Error(ErrorCode::NotApplicable,
                    std::string(model.name()) + ": no digital limit for a pure-jump model with b = 0");
    }
    const double one_sided = 0.5 * (1.0 + sign(b));
    if (profile.variation == Variation::Finite) {
        return {one_sided, DigitalLimitCase::DriftDominated};
    }
    const auto& power = std::get<PowerLawProfile>(profile.kind);
    if (power.eta < 1.0) return {one_sided, DigitalLimitCase::DriftDominated};
    if (power.eta > 1.0) return {0.5, DigitalLimitCase::JumpDominated};
    return {0.5 + std::atan(b / power.c1) / std::numbers::pi, DigitalLimitCase::Balanced};
}

double digital_limit_oracle(const PowerLawProfile& profile, double b, double T,
                            const QuadratureConfig& cfg) {
    check_maturity(T);
    if (!(profile.eta > 0.0) || !(profile.c1 > 0.0)) {
        throw Error(ErrorCode::InvalidParameter, "power-law profile needs eta > 0 and c1 > 0");
    }
    if (b == 0.0 || !std::isfinite(b)) {
        throw Error(ErrorCode::InvalidParameter, "drift must be finite and nonzero");
    }
    const double scale = profile.c1 * std::pow(T, 1.0 - profile.eta);
    const double abs_b = std::abs(b);
    const double eta = profile.eta;
    const auto integrand = [=](double u) {
        const double damping = std::exp(-scale * std::pow(u / abs_b, eta));
        return u == 0.0 ? damping : damping * std::sin(u) / u;
    };
    const IntegralResult r = integrate_oscillatory(integrand, cfg);
    return 0.5 + sign(b) * r.value / std::numbers::pi;
}

double digital_expansion(const ModelSpec& model, double T) {
    check_maturity(T, true);
    const double sigma = model.diffusion_sigma();
    if (sigma > 0.0) {
        return 0.5 + model.drift() * std::sqrt(T) / (sigma * kSqrtTwoPi);
    }
    const auto* vg = as_vg(model);
    if (vg != nullptr && zero_drift(model.drift())) {
        const double s_plus = critical_moments(model).s_plus;
        return 0.5 - (T / vg->nu) * std::log(s_plus * vg->sigma_vg * std::sqrt(0.5 * vg->nu));
    }
    throw Error(ErrorCode::NotApplicable,
                std::string(model.name()) +
                    ": expansion available for jump diffusions and zero-drift variance gamma");
}

double vg_atm_vol_b0(const ModelSpec& model, double T) {
    check_maturity(T);
    const auto* vg = as_vg(model);
    if (vg == nullptr) {
        throw Error(ErrorCode::NotApplicable, "vg_atm_vol_b0 needs a variance gamma model");
    }
    const double b = model.drift();
    if (!zero_drift(b)) {
        throw Error(ErrorCode::DriftNotZero, "variance gamma drift b = " + std::to_string(b));
    }
    const double s_plus = critical_moments(model).s_plus;
    return kSqrtTwoPi * std::sqrt(T) / vg->nu * std::log(s_plus / (s_plus - 1.0));
}

SlopeEstimate atm_slope_asymptotic(const ModelSpec& model, double T) {
    check_maturity(T);
    if (!model.is_martingale()) {
        throw Error(ErrorCode::NotApplicable, "ATM slope asymptotics need the martingale drift");
    }
    if (model.kind() == ModelKind::BlackScholes) {
        return {0.0, SlopeOrder::Constant, "flat-smile"};
    }
    const double sigma = model.diffusion_sigma();
    if (sigma > 0.0) {
        return {psi(model, Complex{1.0, 0.0}).real() / sigma, SlopeOrder::Constant,
                "jump-diffusion"};
    }
    const double b = model.drift();
    const AsymptoticProfile profile = asymptotic_profile(model);
    if (zero_drift(b)) {
        const auto* vg = as_vg(model);
        if (vg == nullptr) {
            throw Error(ErrorCode::NotApplicable,
                        std::string(model.name()) + ": no slope asymptotics for b = 0");
        }
        const double s_plus = critical_moments(model).s_plus;
        const double level =
            vg->sigma_vg * std::sqrt(0.5 * vg->nu * s_plus * (s_plus - 1.0));
        return {kSqrtTwoPi / vg->nu * std::log(level) * std::sqrt(T), SlopeOrder::SqrtT,
                "vg-zero-drift"};
    }
    const double inv_sqrt_t = 1.0 / std::sqrt(T);
    if (profile.variation == Variation::Finite) {
        return {-std::sqrt(0.5 * std::numbers::pi) * sign(b) * inv_sqrt_t, SlopeOrder::InverseSqrtT,
                "finite-variation"};
    }
    const auto* power = std::get_if<PowerLawProfile>(&profile.kind);
    if (power == nullptr || power->eta != 1.0) {
        throw Error(ErrorCode::NotApplicable,
                    std::string(model.name()) + ": no slope asymptotics for this profile");
    }
    return {-std::sqrt(2.0 / std::numbers::pi) * std::atan(b / power->c1) * inv_sqrt_t,
            SlopeOrder::InverseSqrtT, "power-law-linear"};
}

}  // namespace levysmile
