#include "levysmile/model_io.hpp"

#include "levysmile/error.hpp"

#include <json.hpp>

#include <array>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <type_traits>

namespace levysmile {
namespace {

using nlohmann::json;

struct ModelSchema {
    std::string_view name;
    std::vector<std::string_view> fields;
};

const std::array<ModelSchema, 7> kSchemas{{
    {"blackscholes", {"sigma"}},
    {"merton", {"sigma", "lambda", "delta", "mu"}},
    {"kou", {"sigma", "lambda", "p", "lambda_plus", "lambda_minus"}},
    {"cgmy", {"c", "g", "m", "y"}},
    {"vg", {"sigma_vg", "nu", "theta"}},
    {"nig", {"alpha", "beta", "delta_nig"}},
    {"meixner", {"a_bar", "b_bar", "d_bar"}},
}};

std::string canonical_model_name(std::string_view raw) {
    std::string name;
    for (const char c : raw) {
        if (c == '_' || c == '-' || c == ' ') continue;
        name += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    if (name == "bs") return "blackscholes";
    if (name == "variancegamma") return "vg";
    return name;
}

// Accepted spellings that differ from the canonical field names.
std::string canonical_field(std::string_view model, std::string_view field) {
    if (model == "nig" && field == "delta") return "delta_nig";
    if (model == "vg" && field == "sigma") return "sigma_vg";
    return std::string(field);
}

const ModelSchema& schema_for(const std::string& name) {
    for (const auto& schema : kSchemas) {
        if (schema.name == name) return schema;
    }
    throw Error(ErrorCode::InvalidInput, "unknown model '" + name + "'");
}

ModelParams build_params(const ModelSchema& schema, const std::map<std::string, double>& values) {
    for (const auto& [key, value] : values) {
        bool known = false;
        for (const auto field : schema.fields) known = known || field == key;
        if (!known) {
            throw Error(ErrorCode::InvalidInput,
                        "unknown parameter '" + key + "' for model " + std::string(schema.name));
        }
    }
    std::vector<double> v;
    for (const auto field : schema.fields) {
        const auto it = values.find(std::string(field));
        if (it == values.end()) {
            throw Error(ErrorCode::InvalidInput, "missing parameter '" + std::string(field) +
                                                     "' for model " + std::string(schema.name));
        }
        v.push_back(it->second);
    }
    const std::string_view n = schema.name;
    if (n == "blackscholes") return BlackScholesParams{v[0]};
    if (n == "merton") return MertonParams{v[0], v[1], v[2], v[3]};
    if (n == "kou") return KouParams{v[0], v[1], v[2], v[3], v[4]};
    if (n == "cgmy") return CgmyParams{v[0], v[1], v[2], v[3]};
    if (n == "vg") return VarianceGammaParams{v[0], v[1], v[2]};
    if (n == "nig") return NigParams{v[0], v[1], v[2]};
    return MeixnerParams{v[0], v[1], v[2]};
}

DriftPolicy parse_drift(const json& drift) {
    if (drift.is_null()) return MartingaleDrift{};
    if (drift.is_string()) {
        if (drift.get<std::string>() == "martingale") return MartingaleDrift{};
        throw Error(ErrorCode::InvalidInput, "drift must be \"martingale\" or a number");
    }
    if (drift.is_number()) return ExplicitDrift{drift.get<double>()};
    if (drift.is_object() && drift.contains("explicit") && drift["explicit"].is_number()) {
        return ExplicitDrift{drift["explicit"].get<double>()};
    }
    throw Error(ErrorCode::InvalidInput, "unrecognized drift specification");
}

ModelSpec assemble(std::string_view raw_name, const std::map<std::string, double>& raw_values,
                   const ParamOverrides& overrides, DriftPolicy drift) {
    const std::string name = canonical_model_name(raw_name);
    const ModelSchema& schema = schema_for(name);
    std::map<std::string, double> values;
    for (const auto& [key, value] : raw_values) values[canonical_field(name, key)] = value;
    for (const auto& [key, value] : overrides) values[canonical_field(name, key)] = value;
    return ModelSpec(build_params(schema, values), drift);
}

}  // namespace

ModelSpec parse_model(std::string_view json_text, const ParamOverrides& overrides) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::InvalidInput, std::string("model JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("model") || !doc["model"].is_string()) {
        throw Error(ErrorCode::InvalidInput, "model JSON needs a string field \"model\"");
    }
    std::map<std::string, double> values;
    if (doc.contains("params")) {
        if (!doc["params"].is_object()) {
            throw Error(ErrorCode::InvalidInput, "\"params\" must be an object");
        }
        for (const auto& [key, value] : doc["params"].items()) {
            if (!value.is_number()) {
                throw Error(ErrorCode::InvalidInput, "parameter '" + key + "' must be a number");
            }
            values[key] = value.get<double>();
        }
    }
    const DriftPolicy drift = parse_drift(doc.contains("drift") ? doc["drift"] : json());
    return assemble(doc["model"].get<std::string>(), values, overrides, drift);
}

ModelSpec load_model(const std::filesystem::path& path, const ParamOverrides& overrides) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorCode::InvalidInput, "cannot open model file " + path.string());
    }
    std::ostringstream text;
    text << in.rdbuf();
    return parse_model(text.str(), overrides);
}

ModelSpec model_from_params(std::string_view name, const ParamOverrides& params,
                            std::string_view drift_text) {
    DriftPolicy drift = MartingaleDrift{};
    if (drift_text != "martingale") {
        double b = 0.0;
        const auto* end = drift_text.data() + drift_text.size();
        const auto [ptr, ec] = std::from_chars(drift_text.data(), end, b);
        if (ec != std::errc() || ptr != end) {
            throw Error(ErrorCode::InvalidInput,
                        "drift must be 'martingale' or a number, got '" + std::string(drift_text) + "'");
        }
        drift = ExplicitDrift{b};
    }
    return assemble(name, {}, params, drift);
}

std::string model_to_json(const ModelSpec& model) {
    const ModelSchema& schema = schema_for(std::string(model.name()));
    const std::vector<double> values = std::visit(
        [](const auto& p) -> std::vector<double> {
            using P = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<P, BlackScholesParams>) return {p.sigma};
            else if constexpr (std::is_same_v<P, MertonParams>) return {p.sigma, p.lambda, p.delta, p.mu};
            else if constexpr (std::is_same_v<P, KouParams>)
                return {p.sigma, p.lambda, p.p, p.lambda_plus, p.lambda_minus};
            else if constexpr (std::is_same_v<P, CgmyParams>) return {p.c, p.g, p.m, p.y};
            else if constexpr (std::is_same_v<P, VarianceGammaParams>) return {p.sigma_vg, p.nu, p.theta};
            else if constexpr (std::is_same_v<P, NigParams>) return {p.alpha, p.beta, p.delta};
            else return {p.a_bar, p.b_bar, p.d_bar};
        },
        model.params());

    json doc;
    doc["model"] = schema.name;
    json params = json::object();
    for (std::size_t i = 0; i < values.size(); ++i) params[std::string(schema.fields[i])] = values[i];
    doc["params"] = params;
    if (const auto* explicit_drift = std::get_if<ExplicitDrift>(&model.drift_policy())) {
        doc["drift"] = json{{"explicit", explicit_drift->b}};
    } else {
        doc["drift"] = "martingale";
    }
    return doc.dump();
}

}  // namespace levysmile
