#include "support.hpp"

#include <levysmile/asymptotics.hpp>
#include <levysmile/blackscholes.hpp>
#include <levysmile/error.hpp>
#include <levysmile/fourier.hpp>

#include <cmath>
#include <numbers>

using namespace testing;

namespace {

ErrorCode code_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::InvalidInput;
}

}  // namespace

TEST_CASE("slope from a digital price", "[asymptotics]") {
    // A Black-Scholes digital gives a flat smile.
    for (const double T : {0.01, 1.0}) {
        CHECK_THAT(slope_from_digital(bs_digital(0.3, 0.0, T), 0.3, T), WithinAbs(0.0, 1e-13));
    }
    // sigma = 0: the slope is (1/2 - P) sqrt(2 pi / T).
    CHECK_THAT(slope_from_digital(0.4, 0.0, 0.25), WithinAbs(0.1 * std::sqrt(2.0 * std::numbers::pi) / 0.5, 1e-14));
    // P = 1/2: the slope tends to -sigma/2.
    CHECK_THAT(slope_from_digital(0.5, 0.2, 1e-8), WithinAbs(-0.1, 1e-9));
    CHECK(code_of([] { (void)slope_from_digital(1.2, 0.2, 1.0); }) == ErrorCode::InvalidParameter);
    CHECK(code_of([] { (void)slope_from_digital(0.5, -0.2, 1.0); }) == ErrorCode::InvalidParameter);
    CHECK(code_of([] { (void)slope_from_digital(0.5, 0.2, 0.0); }) == ErrorCode::InvalidParameter);
}

TEST_CASE("digital limits by model class", "[asymptotics]") {
    const DigitalLimit n = digital_limit(nig());
    CHECK(n.limit_case == DigitalLimitCase::Balanced);
    CHECK_THAT(n.value, WithinAbs(0.404788119099179, 1e-13));

    const DigitalLimit x = digital_limit(meixner());
    CHECK(x.limit_case == DigitalLimitCase::Balanced);
    CHECK_THAT(x.value, WithinAbs(0.555809997901959, 1e-13));

    const DigitalLimit c = digital_limit(cgmy());
    CHECK(c.limit_case == DigitalLimitCase::DriftDominated);
    CHECK(c.value == 0.0);

    const DigitalLimit k = digital_limit(kou());
    CHECK(k.limit_case == DigitalLimitCase::JumpDiffusion);
    CHECK(k.value == 0.5);

    // Variance gamma is of finite variation; the martingale drift is positive here.
    REQUIRE(vg().drift() > 0.0);
    CHECK(digital_limit(vg()).value == 1.0);
    CHECK(code_of([] { (void)digital_limit(vg_zero_drift()); }) == ErrorCode::NotApplicable);

}

TEST_CASE("limit oracle integral", "[asymptotics][oracle]") {
    // eta = 1: T-independent arctan form.
    for (const double b : {-0.7, 0.2}) {
        for (const double T : {1e-1, 1e-6}) {
            CHECK_THAT(digital_limit_oracle({1.0, 1.1}, b, T),
                       WithinAbs(0.5 + std::atan(b / 1.1) / std::numbers::pi, 1e-8));
        }
    }
    CHECK_THAT(digital_limit_oracle({0.5, 1.0}, 1.0, 1e-10), WithinAbs(1.0, 1e-3));
    CHECK_THAT(digital_limit_oracle({0.5, 1.0}, -1.0, 1e-10), WithinAbs(0.0, 1e-3));
    CHECK_THAT(digital_limit_oracle({1.5, 1.0}, 1.0, 1e-10), WithinAbs(0.5, 1e-3));
    CHECK(code_of([] { (void)digital_limit_oracle({1.0, 1.0}, 0.0, 0.1); }) == ErrorCode::InvalidParameter);
}

TEST_CASE("pure-jump digitals approach their limit", "[asymptotics][property]") {
    // The sign of P - 1/2 follows the sign of the drift.
    for (const ModelSpec& m : {nig(), meixner(), cgmy()}) {
        INFO(m.name());
        const double limit = digital_limit(m).value;
        double last_gap = 1.0;
        for (const double T : {1e-2, 1e-3, 1e-4}) {
            const double p = digital_price(m, 0.0, T);
            CHECK((p - 0.5) * m.drift() > 0.0);
            const double gap = std::abs(p - limit);
            CHECK(gap < last_gap);
            last_gap = gap;
        }
    }
}

TEST_CASE("second-order digital expansions", "[asymptotics]") {
    const ModelSpec m = merton();
    const double coefficient = m.drift() / (0.2 * std::sqrt(2.0 * std::numbers::pi));
    CHECK_THAT(coefficient, WithinAbs(0.140880612906526, 1e-13));
    CHECK_THAT(digital_expansion(m, 0.04), WithinAbs(0.5 + 0.2 * coefficient, 1e-15));
    CHECK(digital_expansion(m, 0.0) == 0.5);
    CHECK_THAT(digital_expansion(m, 0.01), WithinAbs(0.514088, 1e-6));
    // Residual shrinks like T.
    const double r1 = digital_price(m, 0.0, 1e-3) - digital_expansion(m, 1e-3);
    const double r2 = digital_price(m, 0.0, 1e-4) - digital_expansion(m, 1e-4);
    CHECK(std::abs(r1) < 2e-3);
    CHECK_THAT(r1 / r2, WithinRel(10.0, 0.2));

    const ModelSpec v = vg_zero_drift();
    CHECK_THAT(digital_expansion(v, 0.01), WithinAbs(0.4990004, 1e-7));
    CHECK_THAT(digital_price(v, 0.0, 0.01), WithinAbs(digital_expansion(v, 0.01), 1e-3));
    CHECK(code_of([] { (void)digital_expansion(nig(), 0.1); }) == ErrorCode::NotApplicable);
}

TEST_CASE("variance gamma ATM level at zero drift", "[asymptotics]") {
    const ModelSpec v = vg_zero_drift();
    const double s_plus = critical_moments(v).s_plus;
    const double T = 1e-3;
    const double expected = std::sqrt(2.0 * std::numbers::pi * T) / 0.5 * std::log(s_plus / (s_plus - 1.0));
    CHECK_THAT(vg_atm_vol_b0(v, T), WithinAbs(expected, 1e-15));
    CHECK_THAT(vg_atm_vol_b0(v, 0.01), WithinAbs(0.0501117, 1e-7));
    // Against the implied vol of the Fourier ATM price.
    const double sigma = implied_vol_otm(call_price(v, 0.0, T), 0.0, T).sigma;
    CHECK_THAT(vg_atm_vol_b0(v, T), WithinRel(sigma, 0.01));
    CHECK(code_of([&] { (void)vg_atm_vol_b0(vg(), T); }) == ErrorCode::DriftNotZero);
    CHECK(code_of([&] { (void)vg_atm_vol_b0(nig(), T); }) == ErrorCode::NotApplicable);
}

TEST_CASE("asymptotic ATM slopes", "[asymptotics]") {
    const SlopeEstimate k = atm_slope_asymptotic(kou(), 0.01);
    CHECK_THAT(k.value, WithinAbs(-0.654985351882160, 1e-13));
    CHECK(k.order == SlopeOrder::Constant);
    CHECK(k.formula_id == "jump-diffusion");

    const SlopeEstimate n = atm_slope_asymptotic(nig(), 0.1);
    CHECK_THAT(n.value, WithinAbs(0.754711693261272, 1e-12));
    CHECK(n.order == SlopeOrder::InverseSqrtT);
    CHECK(n.formula_id == "power-law-linear");

    const SlopeEstimate c = atm_slope_asymptotic(cgmy(), 0.01);
    CHECK_THAT(c.value, WithinAbs(std::sqrt(0.5 * std::numbers::pi) * 10.0, 1e-12));
    CHECK(c.formula_id == "finite-variation");

    CHECK(atm_slope_asymptotic(black_scholes(), 1.0).value == 0.0);
    CHECK(code_of([] { (void)atm_slope_asymptotic(vg_zero_drift(), 0.1); }) == ErrorCode::NotApplicable);
    CHECK(to_string(SlopeOrder::SqrtT) == "sqrt-T");
    CHECK(to_string(DigitalLimitCase::Balanced) == "balanced");
}
