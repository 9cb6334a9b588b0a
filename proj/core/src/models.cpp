#include "levysmile/models.hpp"

#include "levysmile/error.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace levysmile {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require(bool ok, const std::string& what) {
    if (!ok) {
        throw Error(ErrorCode::InvalidParameter, what);
    }
}

bool finite(std::initializer_list<double> xs) {
    for (double x : xs) {
        if (!std::isfinite(x)) return false;
    }
    return true;
}

void validate(const BlackScholesParams& p) {
    require(finite({p.sigma}) && p.sigma > 0.0, "blackscholes: sigma must be > 0");
}

void validate(const MertonParams& p) {
    require(finite({p.sigma, p.lambda, p.delta, p.mu}), "merton: parameters must be finite");
    require(p.sigma > 0.0, "merton: sigma must be > 0");
    require(p.lambda > 0.0, "merton: lambda must be > 0");
    require(p.delta > 0.0, "merton: delta must be > 0");
}

void validate(const KouParams& p) {
    require(finite({p.sigma, p.lambda, p.p, p.lambda_plus, p.lambda_minus}),
            "kou: parameters must be finite");
    require(p.sigma > 0.0, "kou: sigma must be > 0");
    require(p.lambda > 0.0, "kou: lambda must be > 0");
    require(p.p > 0.0 && p.p < 1.0, "kou: p must lie in (0,1)");
    require(p.lambda_plus > 1.0, "kou: lambda_plus must be > 1");
    require(p.lambda_minus > 0.0, "kou: lambda_minus must be > 0");
}

void validate(const CgmyParams& p) {
    require(finite({p.c, p.g, p.m, p.y}), "cgmy: parameters must be finite");
    require(p.c > 0.0, "cgmy: C must be > 0");
    require(p.g > 0.0, "cgmy: G must be > 0");
    require(p.m > 1.0, "cgmy: M must be > 1");
    require(p.y > 0.0 && p.y < 1.0, "cgmy: Y must lie in (0,1)");
}

void validate(const VarianceGammaParams& p) {
    require(finite({p.sigma_vg, p.nu, p.theta}), "vg: parameters must be finite");
    require(p.sigma_vg > 0.0, "vg: sigma_vg must be > 0");
    require(p.nu > 0.0, "vg: nu must be > 0");
}

void validate(const NigParams& p) {
    require(finite({p.alpha, p.beta, p.delta}), "nig: parameters must be finite");
    require(p.delta > 0.0, "nig: delta must be > 0");
    require(p.alpha > p.beta + 1.0 && p.alpha > -p.beta,
            "nig: alpha must exceed max(beta + 1, -beta)");
}

void validate(const MeixnerParams& p) {
    require(finite({p.a_bar, p.b_bar, p.d_bar}), "meixner: parameters must be finite");
    require(p.d_bar > 0.0, "meixner: d_bar must be > 0");
    require(p.b_bar > -std::numbers::pi && p.b_bar < std::numbers::pi,
            "meixner: b_bar must lie in (-pi, pi)");
    require(p.a_bar > 0.0 && p.a_bar < std::numbers::pi - p.b_bar,
            "meixner: a_bar must lie in (0, pi - b_bar)");
}

// Positive and negative roots of 1 - theta nu s - sigma^2 nu s^2 / 2.
std::pair<double, double> vg_roots(const VarianceGammaParams& p) {
    const double a = 0.5 * p.sigma_vg * p.sigma_vg * p.nu;
    const double b = p.theta * p.nu;
    const double disc = std::sqrt(b * b + 4.0 * a);
    const double s_plus = b >= 0.0 ? 2.0 / (b + disc) : (disc - b) / (2.0 * a);
    const double s_minus = -1.0 / (a * s_plus);
    return {s_minus, s_plus};
}

MomentStrip strip_of(const ModelParams& params) {
    return std::visit(
        overloaded{
            [](const BlackScholesParams&) { return MomentStrip{-kInf, kInf, false, false}; },
            [](const MertonParams&) { return MomentStrip{-kInf, kInf, false, false}; },
            [](const KouParams& p) {
                return MomentStrip{-p.lambda_minus, p.lambda_plus, true, true};
            },
            [](const CgmyParams& p) { return MomentStrip{-p.g, p.m, true, true}; },
            [](const VarianceGammaParams& p) {
                auto [lo, hi] = vg_roots(p);
                return MomentStrip{lo, hi, true, true};
            },
            [](const NigParams& p) {
                return MomentStrip{-p.alpha - p.beta, p.alpha - p.beta, true, true};
            },
            [](const MeixnerParams& p) {
                return MomentStrip{(-std::numbers::pi - p.b_bar) / p.a_bar,
                                   (std::numbers::pi - p.b_bar) / p.a_bar, true, true};
            },
        },
        params);
}

Complex cpow(Complex z, double y) { return std::exp(y * std::log(z)); }

// log cosh(z), stable for large |Re z|. Agrees with the principal branch
// whenever Re cosh(z) > 0, which holds inside the Meixner strip.
Complex log_cosh(Complex z) {
    if (z.real() < 0.0) z = -z;
    return z + std::log(1.0 + std::exp(-2.0 * z)) - std::numbers::ln2;
}

Complex psi_unchecked(const ModelParams& params, Complex s) {
    return std::visit(
        overloaded{
            [](const BlackScholesParams&) { return Complex{0.0, 0.0}; },
            [s](const MertonParams& p) {
                return p.lambda * (std::exp(0.5 * p.delta * p.delta * s * s + p.mu * s) - 1.0);
            },
            [s](const KouParams& p) {
                return p.lambda * (p.lambda_plus * p.p / (p.lambda_plus - s) +
                                   p.lambda_minus * (1.0 - p.p) / (p.lambda_minus + s) - 1.0);
            },
            [s](const CgmyParams& p) {
                const double scale = p.c * gamma_negative(p.y);
                return scale * (cpow(p.m - s, p.y) - std::pow(p.m, p.y) + cpow(p.g + s, p.y) -
                                std::pow(p.g, p.y));
            },
            [s](const VarianceGammaParams& p) {
                const Complex q =
                    1.0 - p.theta * p.nu * s - 0.5 * p.sigma_vg * p.sigma_vg * p.nu * s * s;
                return -std::log(q) / p.nu;
            },
            [s](const NigParams& p) {
                const Complex shifted = p.beta + s;
                return p.delta * (std::sqrt(p.alpha * p.alpha - p.beta * p.beta) -
                                  std::sqrt(p.alpha * p.alpha - shifted * shifted));
            },
            [s](const MeixnerParams& p) {
                const Complex i{0.0, 1.0};
                const Complex z = -0.5 * i * (p.a_bar * s + p.b_bar);
                return 2.0 * p.d_bar * (std::log(std::cos(0.5 * p.b_bar)) - log_cosh(z));
            },
        },
        params);
}

Complex psi_checked(const ModelParams& params, Complex s) {
    if (!std::isfinite(s.real()) || !std::isfinite(s.imag())) {
        throw Error(ErrorCode::InvalidParameter, "psi: non-finite argument");
    }
    if (const auto* vg = std::get_if<VarianceGammaParams>(&params); vg && s.imag() == 0.0) {
        const double x = s.real();
        const double q = 1.0 - vg->theta * vg->nu * x - 0.5 * vg->sigma_vg * vg->sigma_vg * vg->nu * x * x;
        if (q <= 0.0) {
            throw Error(ErrorCode::BranchCut,
                        "vg: 1 - theta nu s - sigma^2 nu s^2/2 <= 0 at s = " + std::to_string(x));
        }
    }
    const MomentStrip strip = strip_of(params);
    if (!strip.contains(s.real())) {
        throw Error(ErrorCode::StripViolation,
                    "Re(s) = " + std::to_string(s.real()) + " outside (" +
                        std::to_string(strip.s_minus) + ", " + std::to_string(strip.s_plus) + ")");
    }
    const Complex value = psi_unchecked(params, s);
    if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
        throw Error(ErrorCode::Overflow, "psi: non-finite exponent");
    }
    return value;
}

double brownian_sigma(const ModelParams& params) {
    return std::visit(overloaded{
                          [](const BlackScholesParams& p) { return p.sigma; },
                          [](const MertonParams& p) { return p.sigma; },
                          [](const KouParams& p) { return p.sigma; },
                          [](const auto&) { return 0.0; },
                      },
                      params);
}

}  // namespace

double gamma_negative(double y) {
    if (!(y > 0.0 && y < 1.0)) {
        throw Error(ErrorCode::InvalidParameter, "gamma_negative: y must lie in (0,1)");
    }
    return -std::numbers::pi / (y * std::tgamma(y) * std::sin(std::numbers::pi * y));
}

ModelSpec::ModelSpec(ModelParams params, DriftPolicy drift)
    : params_(std::move(params)), drift_policy_(drift) {
    std::visit([](const auto& p) { validate(p); }, params_);
    if (const auto* explicit_drift = std::get_if<ExplicitDrift>(&drift_policy_)) {
        require(std::isfinite(explicit_drift->b), "explicit drift must be finite");
        resolved_drift_ = explicit_drift->b;
    } else if (strip_of(params_).s_plus > 1.0) {
        const double sigma = brownian_sigma(params_);
        resolved_drift_ = -0.5 * sigma * sigma - psi_unchecked(params_, Complex{1.0, 0.0}).real();
    }
}

ModelKind ModelSpec::kind() const noexcept { return static_cast<ModelKind>(params_.index()); }

std::string_view ModelSpec::name() const noexcept {
    switch (kind()) {
        case ModelKind::BlackScholes: return "blackscholes";
        case ModelKind::Merton: return "merton";
        case ModelKind::Kou: return "kou";
        case ModelKind::Cgmy: return "cgmy";
        case ModelKind::VarianceGamma: return "vg";
        case ModelKind::Nig: return "nig";
        case ModelKind::Meixner: return "meixner";
    }
    return "unknown";
}

double ModelSpec::diffusion_sigma() const noexcept { return brownian_sigma(params_); }

double ModelSpec::drift() const {
    if (!resolved_drift_) {
        throw Error(ErrorCode::MomentExplosion,
                    std::string(name()) + ": mgf infinite at s = 1, no martingale drift");
    }
    return *resolved_drift_;
}

Complex psi(const ModelSpec& model, Complex s) { return psi_checked(model.params(), s); }

double martingale_drift(const ModelSpec& model) {
    const MomentStrip strip = strip_of(model.params());
    if (!(strip.s_plus > 1.0)) {
        throw Error(ErrorCode::MomentExplosion, std::string(model.name()) +
                                                    ": s_plus <= 1, martingale drift undefined");
    }
    const double sigma = model.diffusion_sigma();
    return -0.5 * sigma * sigma - psi_checked(model.params(), Complex{1.0, 0.0}).real();
}

Complex log_mgf(const ModelSpec& model, Complex s, double T) {
    const double sigma = model.diffusion_sigma();
    return T * (model.drift() * s + 0.5 * sigma * sigma * s * s + psi(model, s));
}

Complex mgf(const ModelSpec& model, Complex s, double T) {
    if (!(T > 0.0)) {
        throw Error(ErrorCode::InvalidParameter, "mgf: T must be > 0");
    }
    const Complex value = std::exp(log_mgf(model, s, T));
    if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
        throw Error(ErrorCode::Overflow, "mgf overflow");
    }
    return value;
}

MomentStrip critical_moments(const ModelSpec& model) { return strip_of(model.params()); }

AsymptoticProfile asymptotic_profile(const ModelSpec& model) {
    const double b = model.drift();
    return std::visit(
        overloaded{
            [b](const BlackScholesParams& p) {
                return AsymptoticProfile{JumpDiffusionProfile{p.sigma}, b, Variation::Infinite};
            },
            [b](const MertonParams& p) {
                return AsymptoticProfile{JumpDiffusionProfile{p.sigma}, b, Variation::Infinite};
            },
            [b](const KouParams& p) {
                return AsymptoticProfile{JumpDiffusionProfile{p.sigma}, b, Variation::Infinite};
            },
            [b](const CgmyParams& p) {
                const double c1 =
                    -2.0 * p.c * gamma_negative(p.y) * std::cos(0.5 * std::numbers::pi * p.y);
                return AsymptoticProfile{PowerLawProfile{p.y, c1}, b, Variation::Finite};
            },
            [b](const VarianceGammaParams&) {
                return AsymptoticProfile{LogarithmicProfile{}, b, Variation::Finite};
            },
            [b](const NigParams& p) {
                return AsymptoticProfile{PowerLawProfile{1.0, p.delta}, b, Variation::Infinite};
            },
            [b](const MeixnerParams& p) {
                return AsymptoticProfile{PowerLawProfile{1.0, p.a_bar * p.d_bar}, b,
                                         Variation::Infinite};
            },
        },
        model.params());
}

}  // namespace levysmile
