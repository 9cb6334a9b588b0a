#include "acceptance.hpp"

#include <levysmile/asymptotics.hpp>
#include <levysmile/blackscholes.hpp>
#include <levysmile/error.hpp>
#include <levysmile/fourier.hpp>
#include <levysmile/lee.hpp>
#include <levysmile/models.hpp>
#include <levysmile/smile.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>
#include <random>
#include <string>

namespace levysmile::verify {
namespace {

std::string fmt(const char* format, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, format, args...);
    return buf;
}

const ModelSpec& kou_reference() {
    static const ModelSpec m(KouParams{1.0, 15.5, 0.219, 7.11, 9.0});
    return m;
}
const ModelSpec& nig_reference() {
    static const ModelSpec m(NigParams{8.5, 2.0, 1.1});
    return m;
}

bool black_scholes_oracle(std::string& detail) {
    const ModelSpec bs(BlackScholesParams{0.2});
    double worst_digital = 0.0;
    double worst_call = 0.0;
    for (const double T : {0.01, 0.1, 1.0}) {
        for (const double k : {-0.2, 0.0, 0.2}) {
            worst_digital = std::max(worst_digital, std::abs(digital_price(bs, k, T) - bs_digital(0.2, k, T)));
            worst_call = std::max(worst_call, std::abs(call_price(bs, k, T) - bs_call(0.2, k, T)));
        }
    }
    detail = fmt("max |digital - closed form| = %.2e, max |call - closed form| = %.2e (tol 1e-8)",
                 worst_digital, worst_call);
    return worst_digital < 1e-8 && worst_call < 1e-8;
}

bool kou_constant(std::string& detail) {
    const double value = psi(kou_reference(), Complex{1.0, 0.0}).real() / kou_reference().diffusion_sigma();
    detail = fmt("psi(1)/sigma = %.8f (target -0.65498 +- 1e-4)", value);
    return std::abs(value + 0.65498) <= 1e-4;
}

bool nig_constant(std::string& detail) {
    const double b = nig_reference().drift();
    detail = fmt("martingale b = %.9f (target -0.339206 +- 1e-6)", b);
    return std::abs(b + 0.339206) <= 1e-6;
}

bool merton_second_order(std::string& detail) {
    const ModelSpec merton(MertonParams{0.2, 1.0, 0.1, -0.1});
    const double target = merton.drift() / (0.2 * std::sqrt(2.0 * std::numbers::pi));
    // Least squares of (P - 1/2)/sqrt(T) against sqrt(T); the intercept is
    // the extrapolated coefficient.
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (const double T : {1e-2, 3e-3, 1e-3, 3e-4, 1e-4}) {
        const double g = (digital_price(merton, 0.0, T) - 0.5) / std::sqrt(T);
        const double x = std::sqrt(T);
        sx += x;
        sy += g;
        sxx += x * x;
        sxy += x * g;
        ++n;
    }
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    const double intercept = (sy - slope * sx) / n;
    const double rel = std::abs(intercept - target) / std::abs(target);
    detail = fmt("extrapolated coefficient %.6f vs b/(sigma sqrt(2 pi)) = %.6f, rel. error %.2f%% (tol 2%%)",
                 intercept, target, 100.0 * rel);
    return rel < 0.02;
}

bool balanced_limits(std::string& detail) {
    const double nig = digital_price(nig_reference(), 0.0, 1e-4);
    const ModelSpec meixner(MeixnerParams{0.3, -0.5, 1.0});
    const double meixner_target = 0.5 + std::atan(meixner.drift() / 0.3) / std::numbers::pi;
    const double mx = digital_price(meixner, 0.0, 1e-4);
    detail = fmt("NIG P(T=1e-4) = %.6f vs 0.40475; Meixner P(T=1e-4) = %.6f vs %.6f (tol 5e-3)", nig,
                 mx, meixner_target);
    return std::abs(nig - 0.40475) < 5e-3 && std::abs(mx - meixner_target) < 5e-3;
}

bool cgmy_trend(std::string& detail) {
    const ModelSpec cgmy(CgmyParams{1.0, 5.0, 5.0, 0.5});
    const double p2 = digital_price(cgmy, 0.0, 1e-2);
    const double p3 = digital_price(cgmy, 0.0, 1e-3);
    const double p4 = digital_price(cgmy, 0.0, 1e-4);
    detail = fmt("b = %.6f; P at T = 1e-2, 1e-3, 1e-4: %.6f > %.6f > %.6f, last < 0.15",
                 cgmy.drift(), p2, p3, p4);
    return cgmy.drift() < 0.0 && p2 > p3 && p3 > p4 && p4 < 0.15;
}

bool oracle_integral(std::string& detail) {
    const double b = -0.339206;
    const double closed = 0.5 + std::atan(b / 1.1) / std::numbers::pi;
    double worst = 0.0;
    for (const double T : {1e-1, 1e-4, 1e-8}) {
        worst = std::max(worst, std::abs(digital_limit_oracle({1.0, 1.1}, b, T) - closed));
    }
    const double one_sided = digital_limit_oracle({0.5, 1.0}, 1.0, 1e-8);
    detail = fmt("eta=1: max deviation from arctan form %.2e (tol 1e-6); eta=0.5, T=1e-8: %.6f vs 1 (tol 1e-2)",
                 worst, one_sided);
    return worst < 1e-6 && std::abs(one_sided - 1.0) < 1e-2;
}

bool vg_zero_drift(std::string& detail) {
    const ModelSpec vg(VarianceGammaParams{0.2, 0.5, -0.02});
    std::vector<double> residuals;
    bool within_bound = true;
    for (double T = 1e-2; T > 1e-3; T /= 2.0) {
        const double r = digital_price(vg, 0.0, T) - digital_expansion(vg, T);
        within_bound = within_bound && std::abs(r) <= 10.0 * T * T;
        residuals.push_back(r);
    }
    double lo = 1e300, hi = 0.0;
    for (std::size_t i = 1; i < residuals.size(); ++i) {
        const double ratio = residuals[i - 1] / residuals[i];
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
    }
    const double s_plus = critical_moments(vg).s_plus;
    const double T = 1e-3;
    const double lead = (T / 0.5) * std::log(s_plus / (s_plus - 1.0));
    const double call = call_price(vg, 0.0, T);
    const double rel = std::abs(call - lead) / lead;
    detail = fmt("b = %.1e; residual ratios under halving in [%.3f, %.3f] (need [2.5, 6]); "
                 "|residual| <= 10 T^2: %s; C(1e-3) = %.6e vs %.6e (%.2f%%, tol 5%%)",
                 vg.drift(), lo, hi, within_bound ? "yes" : "no", call, lead, 100.0 * rel);
    return lo >= 2.5 && hi <= 6.0 && within_bound && rel < 0.05;
}

bool strike_derivative(std::string& detail) {
    QuadratureConfig cfg;
    cfg.abs_tol = 1e-13;
    const double h = 1e-4;
    const double T = 0.1;
    double worst = 0.0;
    std::string parts;
    for (const ModelSpec* m : {&nig_reference(), &kou_reference()}) {
        const double up = call_price(*m, std::log1p(h), T, cfg);
        const double down = call_price(*m, std::log1p(-h), T, cfg);
        const double digital = digital_price(*m, 0.0, T, cfg);
        const double gap = std::abs((up - down) / (2.0 * h) + digital);
        worst = std::max(worst, gap);
        parts += fmt("%s %.2e; ", std::string(m->name()).c_str(), gap);
    }
    detail = parts + "abs_tol 1e-13, tol 1e-6";
    return worst < 1e-6;
}

template <class Draw>
std::pair<int, int> equivalence_draws(std::mt19937_64& rng, Draw draw) {
    int violations = 0;
    int accepted = 0;
    while (accepted < 1000) {
        std::optional<ModelSpec> model;
        try {
            model.emplace(draw(rng));
            if (std::abs(model->drift()) <= 1e-10) continue;
        } catch (const Error&) {
            continue;
        }
        const MomentStrip strip = critical_moments(*model);
        const bool right_steeper = strip.s_plus - 1.0 < -strip.s_minus;
        if ((model->drift() < 0.0) != right_steeper) ++violations;
        ++accepted;
    }
    return {accepted, violations};
}

bool equivalence_property(std::string& detail) {
    std::mt19937_64 rng(20240611);
    auto u = [](std::mt19937_64& g, double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(g);
    };
    const auto cgmy = equivalence_draws(rng, [&](auto& g) {
        return ModelSpec(CgmyParams{u(g, 0.1, 5.0), u(g, 0.5, 20.0), u(g, 1.05, 20.0), u(g, 0.05, 0.95)});
    });
    const auto vg = equivalence_draws(rng, [&](auto& g) {
        return ModelSpec(VarianceGammaParams{u(g, 0.05, 0.8), u(g, 0.05, 2.0), u(g, -0.6, 0.6)});
    });
    const auto nig = equivalence_draws(rng, [&](auto& g) {
        const double alpha = u(g, 1.2, 30.0);
        return ModelSpec(NigParams{alpha, u(g, -alpha, alpha - 1.0), u(g, 0.05, 3.0)});
    });
    const auto meixner = equivalence_draws(rng, [&](auto& g) {
        const double b_bar = u(g, -3.1, 3.1);
        return ModelSpec(MeixnerParams{u(g, 0.01, std::numbers::pi - b_bar), b_bar, u(g, 0.1, 3.0)});
    });
    const int violations = cgmy.second + vg.second + nig.second + meixner.second;
    detail = fmt("violations: cgmy %d/%d, vg %d/%d, nig %d/%d, meixner %d/%d", cgmy.second, cgmy.first,
                 vg.second, vg.first, nig.second, nig.first, meixner.second, meixner.first);
    return violations == 0;
}

bool figure_reproduction(std::string& detail) {
    const FigureDataset nig_data = figure_report(nig_reference(), 0.1, linear_grid(-0.6, 0.6, 101));
    const FigureDataset kou_data = figure_report(kou_reference(), 0.005, linear_grid(-0.5, 0.5, 101));
    const WingReport kou_wings = wing_asymptotes(kou_reference(), 0.005);
    if (!nig_data.fd_slope || !nig_data.atm_tangent || !kou_data.fd_slope || !kou_data.atm_tangent) {
        detail = "missing slope in figure dataset";
        return false;
    }
    // Arctangent formula evaluated independently of the library dispatch,
    // reported next to the stated target.
    const double b = nig_reference().drift();
    const double nig_tangent = -std::sqrt(2.0 / std::numbers::pi) * std::atan(b / 1.1) / std::sqrt(0.1);
    const double target = 0.755086;
    const bool nig_ok = nig_data.fd_slope->value > 0.0 && std::abs(nig_data.atm_tangent->slope - target) <= 1e-4;
    const bool kou_ok = kou_data.fd_slope->value < 0.0 && std::abs(kou_data.atm_tangent->slope + 0.65498) <= 1e-4;
    const bool mismatch = kou_wings.right_steeper && kou_wings.atm_slope_positive == false;
    detail = fmt("NIG T=0.1: fd %.6f, tangent %.6f vs target 0.755086 +- 1e-4 (off by %.1e; "
                 "independent formula gives %.6f); Kou T=0.005: fd %.6f, tangent %.6f; "
                 "Kou right_steeper=%s, slope positive=%s",
                 nig_data.fd_slope->value, nig_data.atm_tangent->slope,
                 std::abs(nig_data.atm_tangent->slope - target), nig_tangent, kou_data.fd_slope->value,
                 kou_data.atm_tangent->slope, kou_wings.right_steeper ? "true" : "false",
                 kou_wings.atm_slope_positive.value_or(false) ? "true" : "false");
    return nig_ok && kou_ok && mismatch;
}

bool implied_vol_round_trip(std::string& detail) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> sig(0.01, 2.0), strike(-1.0, 1.0), mat(1e-4, 10.0);
    int failures = 0;
    int otm_failures = 0;
    double worst = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const double sigma = sig(rng);
        const double k = strike(rng);
        const double T = mat(rng);
        double err = std::numeric_limits<double>::infinity();
        try {
            err = std::abs(implied_vol(bs_call(sigma, k, T), k, T).sigma - sigma);
        } catch (const Error&) {
        }
        if (!(err < 1e-9)) ++failures;
        worst = std::max(worst, std::isfinite(err) ? err : 1.0);
        try {
            if (!(std::abs(implied_vol_otm(bs_otm_price(sigma, k, T), k, T).sigma - sigma) < 1e-9)) {
                ++otm_failures;
            }
        } catch (const Error&) {
            ++otm_failures;
        }
    }
    detail = fmt("call-price round trips off by >= 1e-9: %d/10000 (worst %.2e); "
                 "out-of-the-money-price round trips: %d/10000",
                 failures, worst, otm_failures);
    return failures == 0;
}

}  // namespace

std::vector<Criterion> acceptance_criteria() {
    return {
        {1, "Black-Scholes oracle", 5.0, black_scholes_oracle},
        {2, "Kou psi(1)/sigma", 1.0, kou_constant},
        {3, "NIG martingale drift", 1.0, nig_constant},
        {4, "Merton second-order digital", 120.0, merton_second_order},
        {5, "eta = 1 digital limits (NIG, Meixner)", 120.0, balanced_limits},
        {6, "CGMY digital trend", 120.0, cgmy_trend},
        {7, "digital limit oracle integral", 30.0, oracle_integral},
        {8, "variance gamma zero drift", 120.0, vg_zero_drift},
        {9, "strike derivative identity", 30.0, strike_derivative},
        {10, "steepness equivalence property", 10.0, equivalence_property},
        {11, "figure reproduction", 300.0, figure_reproduction},
        {12, "implied-vol round trip", 5.0, implied_vol_round_trip},
    };
}

std::string format_result(const CriterionResult& r) {
    return fmt("[%s] %02d %s (%.2fs / %.0fs): ", r.passed ? "PASS" : "FAIL", r.id, r.title.c_str(),
               r.seconds, r.budget_seconds) +
           r.detail;
}

std::vector<CriterionResult> run_acceptance(std::ostream& out, const std::set<int>& only) {
    std::vector<CriterionResult> results;
    for (const Criterion& c : acceptance_criteria()) {
        if (!only.empty() && !only.contains(c.id)) continue;
        CriterionResult r;
        r.id = c.id;
        r.title = c.title;
        r.budget_seconds = c.budget_seconds;
        const auto start = std::chrono::steady_clock::now();
        try {
            r.passed = c.run(r.detail);
        } catch (const std::exception& e) {
            r.passed = false;
            r.detail = std::string("error: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (r.seconds > r.budget_seconds) {
            r.passed = false;
            r.detail += " [over runtime budget]";
        }
        out << format_result(r) << '\n' << std::flush;
        results.push_back(std::move(r));
    }
    return results;
}

}  // namespace levysmile::verify
