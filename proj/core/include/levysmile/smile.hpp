#pragma once

#include "levysmile/asymptotics.hpp"
#include "levysmile/models.hpp"
#include "levysmile/quadrature.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace levysmile {

struct SmilePoint {
    double k = 0.0;
    double sigma = 0.0;
    double price = 0.0;  ///< call price
    double inversion_residual = 0.0;
    bool valid = false;
    std::string diagnostic;  ///< error message when !valid
};

/// n equally spaced log-strikes from lo to hi inclusive.
[[nodiscard]] std::vector<double> linear_grid(double lo, double hi, std::size_t n);

/// Implied volatilities on a strictly increasing grid, one point per entry.
/// Points that fail to price or invert are flagged, not fatal; throws
/// Error(AllPointsFailed) when none succeeds. Needs the martingale drift.
[[nodiscard]] std::vector<SmilePoint> build_smile(const ModelSpec& model, double T,
                                                  const std::vector<double>& grid,
                                                  const QuadratureConfig& cfg = {});

/// Implied volatility at k = 0 by direct inversion.
[[nodiscard]] double atm_implied_vol(const ModelSpec& model, double T,
                                     const QuadratureConfig& cfg = {});

/// Central difference (sigma(h) - sigma(-h)) / (2h). Throws
/// Error(StepTooSmall) when the pricing and inversion noise, carried to the
/// slope, exceeds 1e-3 of max(1, |slope|).
[[nodiscard]] double atm_slope_fd(const ModelSpec& model, double T, double h,
                                  const QuadratureConfig& cfg = {});

struct FdSlope {
    double value;
    double h;
};

/// atm_slope_fd starting from h0, doubling h up to h_max while the step is
/// too small.
[[nodiscard]] FdSlope atm_slope_fd_adaptive(const ModelSpec& model, double T,
                                            const QuadratureConfig& cfg = {}, double h0 = 1e-3,
                                            double h_max = 1e-2);

struct AtmTangent {
    double intercept;  ///< sigma_imp(0)
    double slope;
    SlopeOrder order;
};

/// Coefficients c of the wing curves sigma ~ c sqrt(|k|).
struct LeeLines {
    double right;
    double left;
};

struct FigureMetadata {
    std::string model;
    std::string model_json;
    double T = 0.0;
    std::string cfg_digest;
    std::vector<std::string> notes;
};

struct FigureDataset {
    std::vector<SmilePoint> points;
    double atm_vol = 0.0;
    std::optional<AtmTangent> atm_tangent;
    std::optional<LeeLines> lee_lines;
    std::optional<FdSlope> fd_slope;
    FigureMetadata metadata;
};

/// Smile plus the ATM tangent, Lee wing lines and finite-difference slope.
/// Pieces that do not apply to the model are left empty with a note.
[[nodiscard]] FigureDataset figure_report(const ModelSpec& model, double T,
                                          const std::vector<double>& grid,
                                          const QuadratureConfig& cfg = {});

struct SlopeReport {
    double T = 0.0;
    double atm_vol = 0.0;
    double digital = 0.0;
    /// slope_from_digital(digital, atm_vol, T)
    double bridge_slope = 0.0;
    std::optional<FdSlope> fd;
    std::optional<SlopeEstimate> asymptotic;
    std::optional<DigitalLimit> limit;
    std::vector<std::string> notes;
};

[[nodiscard]] SlopeReport slope_report(const ModelSpec& model, double T,
                                       const QuadratureConfig& cfg = {});

/// 64-bit FNV-1a of the configuration fields, as 16 hex digits.
[[nodiscard]] std::string config_digest(const QuadratureConfig& cfg);

}  // namespace levysmile
