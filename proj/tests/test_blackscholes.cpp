#include "support.hpp"

#include <levysmile/blackscholes.hpp>
#include <levysmile/error.hpp>

#include <cmath>
#include <random>

using namespace testing;

TEST_CASE("normal cdf and pdf", "[blackscholes]") {
    CHECK(norm_cdf(0.0) == 0.5);
    CHECK_THAT(norm_cdf(1.0), WithinAbs(0.841344746068543, 1e-15));
    CHECK_THAT(norm_cdf(-10.0), WithinRel(7.61985302416047e-24, 1e-12));
    CHECK_THAT(norm_pdf(0.0), WithinAbs(0.398942280401433, 1e-15));
}

TEST_CASE("call price reference values", "[blackscholes]") {
    // ATM: 2 N(sigma sqrt(T) / 2) - 1.
    CHECK_THAT(bs_call(0.2, 0.0, 1.0), WithinAbs(2.0 * norm_cdf(0.1) - 1.0, 1e-15));
    CHECK_THAT(bs_call(0.25, std::log(1.1), 0.5), WithinAbs(0.0344121470639925, 1e-14));
    CHECK(bs_call(0.0, 0.1, 1.0) == 0.0);
    CHECK_THAT(bs_call(0.0, -0.1, 1.0), WithinAbs(1.0 - std::exp(-0.1), 1e-16));
}

TEST_CASE("put-call parity through the out-of-the-money price", "[blackscholes]") {
    for (const double k : {-0.4, -0.05, 0.05, 0.4}) {
        const double call = bs_call(0.3, k, 0.7);
        const double otm = bs_otm_price(0.3, k, 0.7);
        const double put = call - (1.0 - std::exp(k));
        CHECK_THAT(k < 0.0 ? put : call, WithinAbs(otm, 1e-15));
    }
}

TEST_CASE("monotone in strike and volatility", "[blackscholes][property]") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> ks(-1.0, 1.0);
    std::uniform_real_distribution<double> vols(0.05, 1.5);
    for (int i = 0; i < 500; ++i) {
        const double k = ks(rng);
        const double s = vols(rng);
        CHECK(bs_call(s, k + 1e-3, 0.5) < bs_call(s, k, 0.5));
        CHECK(bs_call(s * 1.01, k, 0.5) >= bs_call(s, k, 0.5));
        CHECK(bs_otm_price(s * 1.01, k, 0.5) > bs_otm_price(s, k, 0.5));
    }
}

TEST_CASE("digital and vega match finite differences", "[blackscholes][property]") {
    for (const double k : {-0.3, 0.0, 0.2}) {
        const double h = 1e-5;
        // dC/dK with K = e^k.
        const double dk = (bs_call(0.4, std::log(std::exp(k) + h), 0.3) -
                           bs_call(0.4, std::log(std::exp(k) - h), 0.3)) / (2.0 * h);
        CHECK_THAT(-dk, WithinAbs(bs_digital(0.4, k, 0.3), 1e-8));
        const double dv = (bs_call(0.4 + h, k, 0.3) - bs_call(0.4 - h, k, 0.3)) / (2.0 * h);
        CHECK_THAT(dv, WithinAbs(bs_vega(0.4, k, 0.3), 1e-8));
    }
}

TEST_CASE("implied vol round trip", "[blackscholes]") {
    for (const double T : {1e-3, 0.1, 2.0}) {
        for (const double k : {-0.5, -0.1, 0.0, 0.1, 0.5}) {
            for (const double s : {0.05, 0.3, 1.2}) {
                const double otm = bs_otm_price(s, k, T);
                if (otm < 1e-250) continue;
                INFO("T=" << T << " k=" << k << " sigma=" << s);
                CHECK_THAT(implied_vol_otm(otm, k, T).sigma, WithinRel(s, 1e-9));
            }
        }
    }
    CHECK_THAT(implied_vol(bs_call(0.3, 0.1, 1.0), 0.1, 1.0).sigma, WithinRel(0.3, 1e-12));
}

TEST_CASE("implied vol rejects prices outside the no-arbitrage band", "[blackscholes]") {
    CHECK_THROWS_AS(implied_vol(1.0, 0.0, 1.0), Error);
    CHECK_THROWS_AS(implied_vol(0.05, -0.2, 1.0), Error);  // below intrinsic 0.181
    CHECK_THROWS_AS(implied_vol_otm(-1e-3, 0.1, 1.0), Error);
    CHECK_THROWS_AS(implied_vol_otm(std::exp(-0.1), -0.1, 1.0), Error);
    CHECK_THROWS_AS(bs_call(0.2, 0.0, 0.0), Error);
    CHECK_THROWS_AS(bs_vega(0.0, 0.0, 1.0), Error);
}
