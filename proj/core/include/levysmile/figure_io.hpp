#pragma once

#include "levysmile/smile.hpp"

#include <filesystem>
#include <ostream>
#include <string>

namespace levysmile {

/// Header "k,sigma,price,residual", one row per point, values in %.17g.
/// Failed points keep their row with nan entries.
void write_smile_csv(const FigureDataset& data, std::ostream& out);

/// Tangent, Lee lines, finite-difference slope, failed points and metadata.
[[nodiscard]] std::string figure_sidecar_json(const FigureDataset& data);

/// Writes <stem>.csv and <stem>.json under dir (created if needed).
void write_figure_files(const FigureDataset& data, const std::filesystem::path& dir,
                        const std::string& stem);

/// "%.17g" rendering used by every numeric output.
[[nodiscard]] std::string format_number(double x);

}  // namespace levysmile
