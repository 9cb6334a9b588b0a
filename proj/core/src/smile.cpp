#include "levysmile/smile.hpp"

#include "levysmile/blackscholes.hpp"
#include "levysmile/error.hpp"
#include "levysmile/fourier.hpp"
#include "levysmile/lee.hpp"
#include "levysmile/model_io.hpp"
#include "levysmile/parallel.hpp"

#include <algorithm>
#include <cinttypes>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>

namespace levysmile {
namespace {

void check_maturity(double T) {
    if (!(T > 0.0) || !std::isfinite(T)) {
        throw Error(ErrorCode::InvalidParameter, "maturity must be finite and > 0");
    }
}

void require_martingale(const ModelSpec& model) {
    if (!model.is_martingale()) {
        throw Error(ErrorCode::NotApplicable, "implied volatilities need the martingale drift");
    }
}

struct Inversion {
    double sigma;
    double otm;
    double residual;
    double vol_noise;  ///< pricing and inversion error expressed in vol units
};

Inversion invert_at(const ModelSpec& model, double k, double T, const QuadratureConfig& cfg) {
    const IntegralResult r = otm_price_result(model, k, T, cfg);
    const VolQuote quote = implied_vol_otm(r.value, k, T);
    const double vega = bs_vega(quote.sigma, k, T);
    const double price_noise = r.error_estimate + cfg.abs_tol + quote.residual;
    return {quote.sigma, r.value, quote.residual, price_noise / vega};
}

double intrinsic(double k) { return k < 0.0 ? -std::expm1(k) : 0.0; }

}  // namespace

std::vector<double> linear_grid(double lo, double hi, std::size_t n) {
    if (!std::isfinite(lo) || !std::isfinite(hi) || !(hi > lo) || n < 2) {
        throw Error(ErrorCode::InvalidParameter, "grid needs finite lo < hi and at least 2 points");
    }
    std::vector<double> grid(n);
    const double step = (hi - lo) / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i) grid[i] = lo + step * static_cast<double>(i);
    grid.back() = hi;
    return grid;
}

std::vector<SmilePoint> build_smile(const ModelSpec& model, double T, const std::vector<double>& grid,
                                    const QuadratureConfig& cfg) {
    check_maturity(T);
    require_martingale(model);
    cfg.validate();
    if (grid.empty()) {
        throw Error(ErrorCode::InvalidParameter, "empty log-strike grid");
    }
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!std::isfinite(grid[i]) || (i > 0 && !(grid[i] > grid[i - 1]))) {
            throw Error(ErrorCode::InvalidParameter, "grid must be finite and strictly increasing");
        }
    }

    std::vector<SmilePoint> points(grid.size());
    parallel_for(grid.size(), [&](std::size_t i) {
        SmilePoint& p = points[i];
        p.k = grid[i];
        try {
            const Inversion inv = invert_at(model, p.k, T, cfg);
            p.sigma = inv.sigma;
            p.price = inv.otm + intrinsic(p.k);
            p.inversion_residual = inv.residual;
            p.valid = true;
        } catch (const std::exception& e) {
            p.diagnostic = e.what();
        }
    });
    if (std::none_of(points.begin(), points.end(), [](const SmilePoint& p) { return p.valid; })) {
        throw Error(ErrorCode::AllPointsFailed, "no grid point could be priced and inverted (first: " +
                                                    points.front().diagnostic + ")");
    }
    return points;
}

double atm_implied_vol(const ModelSpec& model, double T, const QuadratureConfig& cfg) {
    check_maturity(T);
    require_martingale(model);
    return invert_at(model, 0.0, T, cfg).sigma;
}

double atm_slope_fd(const ModelSpec& model, double T, double h, const QuadratureConfig& cfg) {
    check_maturity(T);
    require_martingale(model);
    if (!(h > 0.0) || !std::isfinite(h)) {
        throw Error(ErrorCode::InvalidParameter, "finite-difference step must be > 0");
    }
    const Inversion up = invert_at(model, h, T, cfg);
    const Inversion down = invert_at(model, -h, T, cfg);
    const double slope = (up.sigma - down.sigma) / (2.0 * h);
    const double noise = (up.vol_noise + down.vol_noise) / (2.0 * h);
    if (!(noise <= 1e-3 * std::max(1.0, std::abs(slope)))) {
        throw Error(ErrorCode::StepTooSmall, "slope noise " + std::to_string(noise) +
                                                 " at h = " + std::to_string(h));
    }
    return slope;
}

FdSlope atm_slope_fd_adaptive(const ModelSpec& model, double T, const QuadratureConfig& cfg,
                              double h0, double h_max) {
    double h = h0;
    for (;;) {
        try {
            return {atm_slope_fd(model, T, h, cfg), h};
        } catch (const Error& e) {
            if (e.code() != ErrorCode::StepTooSmall || h >= h_max) throw;
            h = std::min(2.0 * h, h_max);
        }
    }
}

FigureDataset figure_report(const ModelSpec& model, double T, const std::vector<double>& grid,
                            const QuadratureConfig& cfg) {
    FigureDataset data;
    data.points = build_smile(model, T, grid, cfg);
    data.atm_vol = atm_implied_vol(model, T, cfg);

    auto& notes = data.metadata.notes;
    try {
        const SlopeEstimate est = atm_slope_asymptotic(model, T);
        data.atm_tangent = AtmTangent{data.atm_vol, est.value, est.order};
    } catch (const Error& e) {
        notes.push_back(std::string("atm tangent absent: ") + e.what());
    }
    try {
        const WingReport wings = wing_asymptotes(model, T);
        data.lee_lines = LeeLines{wings.right_asymptote, wings.left_asymptote};
    } catch (const Error& e) {
        notes.push_back(std::string("lee lines absent: ") + e.what());
    }
    try {
        data.fd_slope = atm_slope_fd_adaptive(model, T, cfg);
    } catch (const Error& e) {
        notes.push_back(std::string("finite-difference slope absent: ") + e.what());
    }
    const auto failed = std::count_if(data.points.begin(), data.points.end(),
                                      [](const SmilePoint& p) { return !p.valid; });
    if (failed > 0) {
        notes.push_back(std::to_string(failed) + " grid points failed to invert");
    }

    data.metadata.model = std::string(model.name());
    data.metadata.model_json = model_to_json(model);
    data.metadata.T = T;
    data.metadata.cfg_digest = config_digest(cfg);
    return data;
}

SlopeReport slope_report(const ModelSpec& model, double T, const QuadratureConfig& cfg) {
    SlopeReport report;
    report.T = T;
    report.atm_vol = atm_implied_vol(model, T, cfg);
    report.digital = digital_price(model, 0.0, T, cfg);
    report.bridge_slope = slope_from_digital(report.digital, report.atm_vol, T);
    try {
        report.fd = atm_slope_fd_adaptive(model, T, cfg);
    } catch (const Error& e) {
        report.notes.push_back(std::string("finite-difference slope: ") + e.what());
    }
    try {
        report.asymptotic = atm_slope_asymptotic(model, T);
    } catch (const Error& e) {
        report.notes.push_back(std::string("asymptotic slope: ") + e.what());
    }
    try {
        report.limit = digital_limit(model);
    } catch (const Error& e) {
        report.notes.push_back(std::string("digital limit: ") + e.what());
    }
    return report;
}

std::string config_digest(const QuadratureConfig& cfg) {
    char contour[32] = "auto";
    if (cfg.contour_a) std::snprintf(contour, sizeof contour, "%.17g", *cfg.contour_a);
    char text[256];
    std::snprintf(text, sizeof text, "contour_a=%s;abs_tol=%.17g;max_half_periods=%zu;order=%d;rule=%d",
                  contour, cfg.abs_tol,
                  cfg.max_half_periods, cfg.acceleration_order, cfg.panel_rule);
    std::uint64_t hash = 14695981039346656037ULL;
    for (const char* c = text; *c != '\0'; ++c) {
        hash ^= static_cast<unsigned char>(*c);
        hash *= 1099511628211ULL;
    }
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016" PRIx64, hash);
    return hex;
}

}  // namespace levysmile
