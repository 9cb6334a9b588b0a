#include "support.hpp"

#include <levysmile/blackscholes.hpp>
#include <levysmile/error.hpp>
#include <levysmile/fourier.hpp>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <numbers>

using namespace testing;

namespace {

bool has_code(const Error& e, ErrorCode code) { return e.code() == code; }

template <class F>
void check_code(F&& f, ErrorCode code) {
    try {
        f();
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(has_code(e, code));
    }
}

// P[X_T >= k] for Merton as a Poisson mixture of normals.
double merton_digital_oracle(double k, double T) {
    const double sigma = 0.2, lambda = 1.0, delta = 0.1, mu = -0.1;
    const double b = -0.5 * sigma * sigma - lambda * (std::exp(mu + 0.5 * delta * delta) - 1.0);
    double sum = 0.0;
    double weight = std::exp(-lambda * T);
    for (int n = 0; n < 60; ++n) {
        const double sd = std::sqrt(sigma * sigma * T + n * delta * delta);
        sum += weight * norm_cdf((b * T + n * mu - k) / sd);
        weight *= lambda * T / (n + 1);
    }
    return sum;
}

// NIG density of X_T with the martingale drift, integrated over [k, inf).
double nig_digital_oracle(double k, double T) {
    const double alpha = 8.5, beta = 2.0, delta = 1.1;
    const double gamma = std::sqrt(alpha * alpha - beta * beta);
    const double b = -delta * (gamma - std::sqrt(alpha * alpha - (beta + 1.0) * (beta + 1.0)));
    const double dt = delta * T;
    auto density = [&](double x) {
        const double y = x - b * T;
        const double r = std::hypot(dt, y);
        // K_1 underflows long before the exponential prefactor matters.
        if (alpha * r > 700.0) return 0.0;
        return alpha * dt / std::numbers::pi * std::exp(dt * gamma + beta * y) *
               std::cyl_bessel_k(1.0, alpha * r) / r;
    };
    boost::math::quadrature::exp_sinh<double> tail;
    boost::math::quadrature::tanh_sinh<double> body;
    // Split at the centre where the density is sharply peaked for small T.
    const double centre = b * T;
    if (k >= centre) return tail.integrate([&](double u) { return density(k + u); });
    return body.integrate(density, k, centre) + tail.integrate([&](double u) { return density(centre + u); });
}

// P[X_T >= k] for variance gamma by conditioning on the gamma clock.
double vg_digital_oracle(double k, double T, double b, double theta) {
    const double sigma = 0.2, nu = 0.5;
    const double shape = T / nu;
    boost::math::quadrature::exp_sinh<double> integrator;
    return integrator.integrate([&](double g) {
        if (g <= 0.0) return 0.0;
        const double pdf = std::exp((shape - 1.0) * std::log(g) - g / nu - boost::math::lgamma(shape) -
                                    shape * std::log(nu));
        return pdf * norm_cdf((b * T + theta * g - k) / (sigma * std::sqrt(g)));
    });
}

}  // namespace

TEST_CASE("Black-Scholes digital and call prices", "[fourier]") {
    for (const double s : {0.1, 0.2, 0.6}) {
        const ModelSpec m = black_scholes(s);
        for (const double T : {0.01, 0.1, 1.0}) {
            for (const double k : {-0.6, -0.2, 0.0, 0.2, 0.6}) {
                INFO("sigma=" << s << " T=" << T << " k=" << k);
                CHECK_THAT(digital_price(m, k, T), WithinAbs(bs_digital(s, k, T), 1e-12));
                CHECK_THAT(call_price(m, k, T), WithinAbs(bs_call(s, k, T), 1e-12));
            }
        }
    }
}

TEST_CASE("deep out-of-the-money prices keep relative accuracy", "[fourier]") {
    const ModelSpec m = black_scholes(0.2);
    for (const double k : {-0.5, 0.5}) {
        const double exact = bs_otm_price(0.2, k, 0.05);
        REQUIRE(exact < 1e-10);
        CHECK_THAT(otm_price_result(m, k, 0.05).value, WithinRel(exact, 1e-8));
    }
}

TEST_CASE("Merton digital against the Poisson mixture", "[fourier][oracle]") {
    const ModelSpec m = merton();
    for (const double T : {1e-3, 0.01, 0.5, 2.0}) {
        for (const double k : {-0.3, 0.0, 0.15}) {
            INFO("T=" << T << " k=" << k);
            CHECK_THAT(digital_price(m, k, T), WithinAbs(merton_digital_oracle(k, T), 1e-10));
        }
    }
    // High-precision values of the same series.
    CHECK_THAT(digital_price(m, 0.0, 0.01), WithinAbs(0.510608650595827, 1e-12));
    CHECK_THAT(digital_price(m, 0.0, 1.0), WithinAbs(0.468331468631028, 1e-12));
}

TEST_CASE("NIG digital against the Bessel density", "[fourier][oracle]") {
    const ModelSpec m = nig();
    CHECK_THAT(digital_price(m, 0.0, 0.1), WithinAbs(0.430121008755666, 1e-10));
    for (const double T : {0.01, 0.1, 1.0}) {
        for (const double k : {-0.2, 0.0, 0.1}) {
            INFO("T=" << T << " k=" << k);
            CHECK_THAT(digital_price(m, k, T), WithinAbs(nig_digital_oracle(k, T), 1e-8));
        }
    }
}

TEST_CASE("variance gamma digital against the gamma mixture", "[fourier][oracle]") {
    const ModelSpec zero = vg_zero_drift();
    const ModelSpec mart = vg();
    for (const double T : {0.5, 1.0}) {
        for (const double k : {-0.1, 0.05}) {
            INFO("T=" << T << " k=" << k);
            CHECK_THAT(digital_price(zero, k, T), WithinAbs(vg_digital_oracle(k, T, 0.0, -0.02), 1e-8));
            CHECK_THAT(digital_price(mart, k, T), WithinAbs(vg_digital_oracle(k, T, mart.drift(), -0.1), 1e-8));
        }
    }
}

TEST_CASE("NIG call against the single-integral formula", "[fourier][oracle]") {
    CHECK_THAT(call_price(nig(), 0.1, 0.1), WithinAbs(0.0163976083265279, 1e-11));
}

TEST_CASE("contour choice does not change the price", "[fourier][property]") {
    for (const ModelSpec& m : {nig(), kou(), cgmy(), meixner()}) {
        INFO(m.name());
        const MomentStrip strip = critical_moments(m);
        const double T = 0.2;
        for (const double k : {-0.1, 0.0, 0.1}) {
            const double d_auto = digital_price(m, k, T);
            const double c_auto = call_price(m, k, T);
            for (const double frac : {0.2, 0.5, 0.8}) {
                QuadratureConfig right;
                right.contour_a = frac * strip.s_plus;
                QuadratureConfig left;
                left.contour_a = frac * strip.s_minus;
                QuadratureConfig call_right;
                call_right.contour_a = 1.0 + frac * (strip.s_plus - 1.0);
                CHECK_THAT(digital_price(m, k, T, right), WithinAbs(d_auto, 1e-9));
                CHECK_THAT(digital_price(m, k, T, left), WithinAbs(d_auto, 1e-9));
                CHECK_THAT(call_price(m, k, T, call_right), WithinAbs(c_auto, 1e-9));
                CHECK_THAT(call_price(m, k, T, left), WithinAbs(c_auto, 1e-9));
            }
        }
    }
}

TEST_CASE("put-call parity through the out-of-the-money price", "[fourier][property]") {
    for (const ModelSpec& m : all_models()) {
        INFO(m.name());
        for (const double k : {-0.3, -0.01, 0.01, 0.3}) {
            const double call = call_price(m, k, 0.25);
            const double otm = otm_price(m, k, 0.25);
            CHECK_THAT(k < 0.0 ? call + std::expm1(k) : call, WithinAbs(otm, 1e-10));
        }
    }
}

TEST_CASE("digital is minus the strike derivative of the call", "[fourier][property]") {
    QuadratureConfig cfg;
    cfg.abs_tol = 1e-13;
    for (const ModelSpec& m : all_models()) {
        INFO(m.name());
        // Small step: the variance gamma density is singular at bT.
        const double h = 1e-5;
        const double T = 0.1;
        for (const double k : {-0.1, 0.0, 0.1}) {
            const double K = std::exp(k);
            const double up = call_price(m, std::log(K + h), T, cfg);
            const double down = call_price(m, std::log(K - h), T, cfg);
            CHECK_THAT(-(up - down) / (2.0 * h), WithinAbs(digital_price(m, k, T, cfg), 1e-6));
        }
    }
}

TEST_CASE("prices are monotone in strike and bounded", "[fourier][property]") {
    for (const ModelSpec& m : all_models()) {
        INFO(m.name());
        double last_digital = 1.0;
        double last_call = 2.0;
        for (double k = -0.5; k <= 0.5; k += 0.05) {
            const double d = digital_price(m, k, 0.3);
            const double c = call_price(m, k, 0.3);
            CHECK(d <= last_digital + 1e-12);
            CHECK(c <= last_call + 1e-12);
            CHECK(c >= std::max(-std::expm1(k), 0.0));
            CHECK(c <= 1.0);
            last_digital = d;
            last_call = c;
        }
    }
}

TEST_CASE("automatic contour stays inside the admissible strip", "[fourier]") {
    for (const ModelSpec& m : all_models()) {
        const MomentStrip strip = critical_moments(m);
        for (const double k : {-1.0, -0.01, 0.0, 0.01, 1.0}) {
            for (const double T : {1e-3, 1.0}) {
                const double d = auto_contour(m, Payoff::Digital, k, T);
                const double c = auto_contour(m, Payoff::Call, k, T);
                CHECK(strip.contains(d));
                CHECK(strip.contains(c));
                CHECK(d != 0.0);
                CHECK((c > 1.0 || c < 0.0));
            }
        }
    }
}

TEST_CASE("pricing errors", "[fourier]") {
    QuadratureConfig bad;
    bad.contour_a = 7.0;  // beyond s_plus = 6.5
    check_code([&] { (void)digital_price(nig(), 0.0, 0.1, bad); }, ErrorCode::StripViolation);
    bad.contour_a = 0.5;  // between the call poles
    check_code([&] { (void)call_price(nig(), 0.0, 0.1, bad); }, ErrorCode::StripViolation);
    check_code([&] { (void)digital_price(nig(), 0.0, 0.0); }, ErrorCode::InvalidParameter);
    check_code([&] { (void)digital_price(nig(), std::nan(""), 0.1); }, ErrorCode::InvalidParameter);
    check_code([&] { (void)digital_price(cgmy(), 0.0, 1e-8); }, ErrorCode::NoConvergence);
    const ModelSpec heavy(VarianceGammaParams{2.0, 1.0, 0.0}, ExplicitDrift{0.0});
    check_code([&] { (void)call_price(heavy, 0.0, 0.1); }, ErrorCode::MomentExplosion);
    CHECK_NOTHROW(digital_price(heavy, 0.0, 0.1));
}
