#pragma once

#include "levysmile/models.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

// JSON model files:
//   {"model": "nig", "params": {"alpha": 8.5, "beta": 2.0, "delta_nig": 1.1},
//    "drift": "martingale"}
// "drift" is optional and may also be a number or {"explicit": b}.

namespace levysmile {

using ParamOverrides = std::vector<std::pair<std::string, double>>;

/// Throws Error(InvalidInput) on malformed JSON, unknown models or missing
/// and unknown parameters, and Error(InvalidParameter) on out-of-range values.
/// Overrides replace (or supply) entries of "params".
[[nodiscard]] ModelSpec parse_model(std::string_view json_text, const ParamOverrides& overrides = {});

[[nodiscard]] ModelSpec load_model(const std::filesystem::path& path,
                                   const ParamOverrides& overrides = {});

/// Model from a name and parameter list alone (martingale drift unless
/// drift_text is a number).
[[nodiscard]] ModelSpec model_from_params(std::string_view name, const ParamOverrides& params,
                                          std::string_view drift_text = "martingale");

[[nodiscard]] std::string model_to_json(const ModelSpec& model);

}  // namespace levysmile
