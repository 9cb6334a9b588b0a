#pragma once

#include <levysmile/models.hpp>

#include <catch_amalgamated.hpp>

namespace testing {

using namespace levysmile;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

inline ModelSpec kou() { return ModelSpec(KouParams{1.0, 15.5, 0.219, 7.11, 9.0}); }
inline ModelSpec nig() { return ModelSpec(NigParams{8.5, 2.0, 1.1}); }
inline ModelSpec cgmy() { return ModelSpec(CgmyParams{1.0, 5.0, 5.0, 0.5}); }
inline ModelSpec merton() { return ModelSpec(MertonParams{0.2, 1.0, 0.1, -0.1}); }
inline ModelSpec meixner() { return ModelSpec(MeixnerParams{0.3, -0.5, 1.0}); }
inline ModelSpec vg_zero_drift() {
    return ModelSpec(VarianceGammaParams{0.2, 0.5, -0.02}, ExplicitDrift{0.0});
}
// With theta = -0.02 the martingale drift is exactly zero, so the
// martingale fixture uses a stronger skew.
inline ModelSpec vg() { return ModelSpec(VarianceGammaParams{0.2, 0.5, -0.1}); }
inline ModelSpec black_scholes(double sigma = 0.2) { return ModelSpec(BlackScholesParams{sigma}); }

// One representative of every family, all with the martingale drift.
inline std::vector<ModelSpec> all_models() {
    return {black_scholes(), merton(), kou(), cgmy(), vg(), nig(), meixner()};
}

}  // namespace testing
