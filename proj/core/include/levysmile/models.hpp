#pragma once

#include <complex>
#include <optional>
#include <string_view>
#include <variant>

namespace levysmile {

using Complex = std::complex<double>;

// Parameter sets of the supported exponential Lévy models. The log-price
// mgf is always M(s,T) = exp(T (b s + sigma^2 s^2 / 2 + psi(s))), with
// sigma the Brownian volatility (zero for the pure-jump models) and psi
// the closed-form jump exponent of the model.

struct BlackScholesParams {
    double sigma;
};

struct MertonParams {
    double sigma;
    double lambda;  ///< jump intensity
    double delta;   ///< jump size standard deviation
    double mu;      ///< mean jump size
};

struct KouParams {
    double sigma;
    double lambda;
    double p;  ///< probability of an upward jump
    double lambda_plus;
    double lambda_minus;
};

struct CgmyParams {
    double c;
    double g;
    double m;
    double y;
};

struct VarianceGammaParams {
    double sigma_vg;  ///< volatility of the subordinated Brownian motion
    double nu;
    double theta;
};

struct NigParams {
    double alpha;
    double beta;
    double delta;
};

/// Schoutens' (a, b, d), written a_bar, b_bar, d_bar.
struct MeixnerParams {
    double a_bar;
    double b_bar;
    double d_bar;
};

using ModelParams = std::variant<BlackScholesParams, MertonParams, KouParams, CgmyParams,
                                 VarianceGammaParams, NigParams, MeixnerParams>;

enum class ModelKind { BlackScholes, Merton, Kou, Cgmy, VarianceGamma, Nig, Meixner };

struct MartingaleDrift {};
struct ExplicitDrift {
    double b;
};
using DriftPolicy = std::variant<MartingaleDrift, ExplicitDrift>;

/// An immutable, validated model. Construction throws Error(InvalidParameter)
/// when a parameter lies outside its admissible range.
class ModelSpec {
public:
    explicit ModelSpec(ModelParams params, DriftPolicy drift = MartingaleDrift{});

    [[nodiscard]] const ModelParams& params() const noexcept { return params_; }
    [[nodiscard]] const DriftPolicy& drift_policy() const noexcept { return drift_policy_; }
    [[nodiscard]] ModelKind kind() const noexcept;
    [[nodiscard]] std::string_view name() const noexcept;

    [[nodiscard]] bool is_martingale() const noexcept {
        return std::holds_alternative<MartingaleDrift>(drift_policy_);
    }
    [[nodiscard]] bool is_pure_jump() const noexcept { return diffusion_sigma() == 0.0; }

    /// Volatility of the Brownian component (0 for CGMY, VG, NIG, Meixner).
    [[nodiscard]] double diffusion_sigma() const noexcept;

    /// Resolved drift b. Throws Error(MomentExplosion) for a martingale
    /// policy when the mgf is infinite at s = 1.
    [[nodiscard]] double drift() const;

private:
    ModelParams params_;
    DriftPolicy drift_policy_;
    std::optional<double> resolved_drift_;
};

/// Analyticity strip s_minus < Re(s) < s_plus of the mgf. Unbounded sides
/// are stored as -inf / +inf.
struct MomentStrip {
    double s_minus;
    double s_plus;
    bool lower_bounded;
    bool upper_bounded;

    [[nodiscard]] bool contains(double re) const noexcept { return s_minus < re && re < s_plus; }
};

enum class Variation { Finite, Infinite };

struct JumpDiffusionProfile {
    double sigma;
};
/// Re psi(a + iy) ~ -c1 y^eta along vertical contours.
struct PowerLawProfile {
    double eta;
    double c1;
};
/// Exponent growing like log|Im s| (variance gamma).
struct LogarithmicProfile {};

using ProfileKind = std::variant<JumpDiffusionProfile, PowerLawProfile, LogarithmicProfile>;

struct AsymptoticProfile {
    ProfileKind kind;
    double drift_b;
    Variation variation;
};

[[nodiscard]] Complex psi(const ModelSpec& model, Complex s);
[[nodiscard]] double martingale_drift(const ModelSpec& model);

/// log M(s,T) = T (b s + sigma^2 s^2 / 2 + psi(s)).
[[nodiscard]] Complex log_mgf(const ModelSpec& model, Complex s, double T);
[[nodiscard]] Complex mgf(const ModelSpec& model, Complex s, double T);

[[nodiscard]] MomentStrip critical_moments(const ModelSpec& model);
[[nodiscard]] AsymptoticProfile asymptotic_profile(const ModelSpec& model);

/// Gamma(-y) for y in (0,1) through the reflection formula.
[[nodiscard]] double gamma_negative(double y);

}  // namespace levysmile
