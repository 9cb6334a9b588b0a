#include "cli.hpp"

#include "acceptance.hpp"

#include <levysmile/asymptotics.hpp>
#include <levysmile/error.hpp>
#include <levysmile/figure_io.hpp>
#include <levysmile/fourier.hpp>
#include <levysmile/lee.hpp>
#include <levysmile/model_io.hpp>
#include <levysmile/smile.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <optional>
#include <set>
#include <string>

namespace levysmile::cli {
namespace {

using nlohmann::ordered_json;

constexpr const char* kDefaultGrid = "-0.5:0.5:101";

struct RunConfig {
    std::string model_file;
    std::string inline_model;
    std::vector<std::string> params;
    std::string drift = "martingale";
    std::vector<double> maturities;
    std::string sweep;
    std::string grid;
    std::string out_dir = ".";
    std::string format = "csv";
    std::optional<double> contour_a;
    std::optional<double> abs_tol;
    std::optional<std::size_t> max_half_periods;
    std::optional<int> acceleration_order;
    std::optional<int> panel_rule;
    std::vector<int> only;
};

double parse_number(const std::string& text, const std::string& what) {
    double value = 0.0;
    const char* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end) {
        throw Error(ErrorCode::InvalidInput, "cannot parse " + what + " '" + text + "'");
    }
    return value;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (;;) {
        const std::size_t pos = text.find(sep, start);
        parts.push_back(text.substr(start, pos - start));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    return parts;
}

ModelSpec resolve_model(const RunConfig& rc) {
    ParamOverrides overrides;
    for (const std::string& p : rc.params) {
        const auto eq = p.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw Error(ErrorCode::InvalidInput, "--param expects key=value, got '" + p + "'");
        }
        overrides.emplace_back(p.substr(0, eq), parse_number(p.substr(eq + 1), "parameter value"));
    }
    if (rc.model_file.empty() == rc.inline_model.empty()) {
        throw Error(ErrorCode::InvalidInput, "give exactly one of --model FILE or --inline NAME");
    }
    if (!rc.model_file.empty()) {
        ModelSpec model = load_model(rc.model_file, overrides);
        if (rc.drift != "martingale") {
            return ModelSpec(model.params(), ExplicitDrift{parse_number(rc.drift, "drift")});
        }
        return model;
    }
    return model_from_params(rc.inline_model, overrides, rc.drift);
}

QuadratureConfig resolve_quadrature(const RunConfig& rc) {
    QuadratureConfig cfg;
    cfg.contour_a = rc.contour_a;
    if (rc.abs_tol) cfg.abs_tol = *rc.abs_tol;
    if (rc.max_half_periods) cfg.max_half_periods = *rc.max_half_periods;
    if (rc.acceleration_order) cfg.acceleration_order = *rc.acceleration_order;
    if (rc.panel_rule) cfg.panel_rule = *rc.panel_rule;
    cfg.validate();
    return cfg;
}

// "a:b" gives one point per decade between a and b; "a:b:n" gives n
// log-spaced points.
std::vector<double> parse_sweep(const std::string& text) {
    const auto parts = split(text, ':');
    if (parts.size() < 2 || parts.size() > 3) {
        throw Error(ErrorCode::InvalidInput, "--T-sweep expects a:b[:n]");
    }
    const double a = parse_number(parts[0], "sweep start");
    const double b = parse_number(parts[1], "sweep end");
    if (!(a > 0.0) || !(b > 0.0)) {
        throw Error(ErrorCode::InvalidInput, "sweep maturities must be > 0");
    }
    std::size_t n = 0;
    if (parts.size() == 3) {
        const double count = parse_number(parts[2], "sweep count");
        if (!(count >= 1.0) || count != std::floor(count)) {
            throw Error(ErrorCode::InvalidInput, "sweep count must be a positive integer");
        }
        n = static_cast<std::size_t>(count);
    } else {
        n = static_cast<std::size_t>(std::lround(std::abs(std::log10(b / a)))) + 1;
    }
    if (n == 1) return {a};
    std::vector<double> values(n);
    const double la = std::log(a);
    const double lb = std::log(b);
    for (std::size_t i = 0; i < n; ++i) {
        values[i] = std::exp(la + (lb - la) * static_cast<double>(i) / static_cast<double>(n - 1));
    }
    values.front() = a;
    values.back() = b;
    return values;
}

std::vector<double> resolve_maturities(const RunConfig& rc) {
    std::vector<double> maturities = rc.maturities;
    if (!rc.sweep.empty()) {
        const auto swept = parse_sweep(rc.sweep);
        maturities.insert(maturities.end(), swept.begin(), swept.end());
    }
    if (maturities.empty()) {
        throw Error(ErrorCode::InvalidInput, "give at least one maturity with --T or --T-sweep");
    }
    for (const double T : maturities) {
        if (!(T > 0.0) || !std::isfinite(T)) {
            throw Error(ErrorCode::InvalidInput, "maturities must be finite and > 0");
        }
    }
    return maturities;
}

std::vector<double> resolve_grid(const std::string& text) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) {
        throw Error(ErrorCode::InvalidInput, "--grid expects lo:hi:n");
    }
    const double n = parse_number(parts[2], "grid size");
    if (!(n >= 2.0) || n != std::floor(n)) {
        throw Error(ErrorCode::InvalidInput, "grid size must be an integer >= 2");
    }
    return linear_grid(parse_number(parts[0], "grid start"), parse_number(parts[1], "grid end"),
                       static_cast<std::size_t>(n));
}

std::string num(double x) { return format_number(x); }

// Empty cell for a missing (NaN) value.
std::string cell(double x) { return std::isnan(x) ? std::string() : num(x); }

std::string opt_bool(const std::optional<bool>& x) {
    return x ? (*x ? "true" : "false") : "";
}

ordered_json json_or_null(double x) {
    return std::isnan(x) ? ordered_json(nullptr) : ordered_json(x);
}

std::string stem_for(const ModelSpec& model, double T) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%s_T%g", std::string(model.name()).c_str(), T);
    return buf;
}

int run_smile(const RunConfig& rc, std::ostream& out) {
    const ModelSpec model = resolve_model(rc);
    const QuadratureConfig cfg = resolve_quadrature(rc);
    const bool default_grid = rc.grid.empty();
    const std::vector<double> grid = resolve_grid(default_grid ? kDefaultGrid : rc.grid);
    for (const double T : resolve_maturities(rc)) {
        FigureDataset data = figure_report(model, T, grid, cfg);
        if (default_grid) {
            data.metadata.notes.emplace_back(
                "default grid -0.5:0.5:101 is a reconstruction; figure grids are not specified");
        }
        const std::string stem = stem_for(model, T);
        write_figure_files(data, rc.out_dir, stem);
        const std::filesystem::path base = std::filesystem::path(rc.out_dir) / stem;
        out << base.string() << ".csv\n" << base.string() << ".json\n";
    }
    return kExitOk;
}

int run_slope(const RunConfig& rc, std::ostream& out) {
    const ModelSpec model = resolve_model(rc);
    const QuadratureConfig cfg = resolve_quadrature(rc);
    ordered_json rows = ordered_json::array();
    if (rc.format == "csv") {
        out << "T,atm_vol,fd_slope,fd_h,asymptotic_slope,order,digital,digital_limit,bridge_slope\n";
    }
    for (const double T : resolve_maturities(rc)) {
        const SlopeReport r = slope_report(model, T, cfg);
        const double nan = std::nan("");
        const double fd = r.fd ? r.fd->value : nan;
        const double fd_h = r.fd ? r.fd->h : nan;
        const double asym = r.asymptotic ? r.asymptotic->value : nan;
        const double limit = r.limit ? r.limit->value : nan;
        const std::string order = r.asymptotic ? std::string(to_string(r.asymptotic->order)) : "";
        if (rc.format == "csv") {
            out << num(T) << ',' << num(r.atm_vol) << ',' << cell(fd) << ',' << cell(fd_h) << ','
                << cell(asym) << ',' << order << ',' << num(r.digital) << ',' << cell(limit) << ','
                << num(r.bridge_slope) << '\n';
        } else {
            rows.push_back({{"T", T},
                            {"atm_vol", r.atm_vol},
                            {"fd_slope", json_or_null(fd)},
                            {"fd_h", json_or_null(fd_h)},
                            {"asymptotic_slope", json_or_null(asym)},
                            {"order", order},
                            {"digital", r.digital},
                            {"digital_limit", json_or_null(limit)},
                            {"bridge_slope", r.bridge_slope},
                            {"notes", r.notes}});
        }
    }
    if (rc.format == "json") out << rows.dump(2) << '\n';
    return kExitOk;
}

int run_digital(const RunConfig& rc, std::ostream& out) {
    const ModelSpec model = resolve_model(rc);
    const QuadratureConfig cfg = resolve_quadrature(rc);
    std::optional<DigitalLimit> limit;
    std::string limit_note;
    try {
        limit = digital_limit(model);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::NotApplicable) throw;
        limit_note = e.what();
    }
    ordered_json rows = ordered_json::array();
    if (rc.format == "csv") out << "T,digital,error_estimate\n";
    for (const double T : resolve_maturities(rc)) {
        const IntegralResult r = digital_price_result(model, 0.0, T, cfg);
        if (rc.format == "csv") {
            out << num(T) << ',' << num(r.value) << ',' << num(r.error_estimate) << '\n';
        } else {
            rows.push_back({{"T", T}, {"digital", r.value}, {"error_estimate", r.error_estimate}});
        }
    }
    if (rc.format == "csv") {
        out << "limit," << (limit ? num(limit->value) : "") << ','
            << (limit ? std::string(to_string(limit->limit_case)) : limit_note) << '\n';
    } else {
        ordered_json doc;
        doc["rows"] = rows;
        doc["limit"] = limit ? ordered_json{{"value", limit->value},
                                            {"case", std::string(to_string(limit->limit_case))}}
                             : ordered_json{{"value", nullptr}, {"note", limit_note}};
        out << doc.dump(2) << '\n';
    }
    return kExitOk;
}

int run_wings(const RunConfig& rc, std::ostream& out) {
    const ModelSpec model = resolve_model(rc);
    ordered_json rows = ordered_json::array();
    if (rc.format == "csv") {
        out << "T,psi_right,psi_left,right_asymptote,left_asymptote,right_steeper,"
               "atm_slope_positive,equivalent\n";
    }
    for (const double T : resolve_maturities(rc)) {
        const WingReport w = wing_asymptotes(model, T);
        if (rc.format == "csv") {
            out << num(T) << ',' << num(w.psi_right) << ',' << num(w.psi_left) << ','
                << num(w.right_asymptote) << ',' << num(w.left_asymptote) << ','
                << (w.right_steeper ? "true" : "false") << ',' << opt_bool(w.atm_slope_positive) << ','
                << opt_bool(w.equivalent) << '\n';
        } else {
            auto flag = [](const std::optional<bool>& b) {
                return b ? ordered_json(*b) : ordered_json(nullptr);
            };
            rows.push_back({{"T", T},
                            {"psi_right", w.psi_right},
                            {"psi_left", w.psi_left},
                            {"right_asymptote", w.right_asymptote},
                            {"left_asymptote", w.left_asymptote},
                            {"right_steeper", w.right_steeper},
                            {"atm_slope_positive", flag(w.atm_slope_positive)},
                            {"equivalent", flag(w.equivalent)}});
        }
    }
    if (rc.format == "json") out << rows.dump(2) << '\n';
    return kExitOk;
}

int run_verify(const RunConfig& rc, std::ostream& out) {
    const std::set<int> only(rc.only.begin(), rc.only.end());
    const auto results = verify::run_acceptance(out, only);
    const auto passed = std::count_if(results.begin(), results.end(),
                                      [](const verify::CriterionResult& r) { return r.passed; });
    out << passed << '/' << results.size() << " criteria passed\n";
    return passed == static_cast<long>(results.size()) ? kExitOk : kExitVerifyFailed;
}

void add_model_options(CLI::App* sub, RunConfig& rc) {
    sub->add_option("--model", rc.model_file, "Model definition file (JSON)");
    sub->add_option("--inline", rc.inline_model, "Model name; parameters via --param");
    sub->add_option("--param", rc.params, "Parameter override key=value (repeatable)");
    sub->add_option("--drift", rc.drift, "'martingale' or an explicit drift b");
}

void add_maturity_options(CLI::App* sub, RunConfig& rc) {
    sub->add_option("--T", rc.maturities, "Maturity (repeatable)");
    sub->add_option("--T-sweep", rc.sweep, "Log-spaced maturities a:b[:n]");
}

void add_quadrature_options(CLI::App* sub, RunConfig& rc) {
    sub->add_option("--contour-a", rc.contour_a, "Contour abscissa (default: automatic)");
    sub->add_option("--abs-tol", rc.abs_tol, "Absolute quadrature tolerance");
    sub->add_option("--max-half-periods", rc.max_half_periods, "Panel cap");
    sub->add_option("--accel-order", rc.acceleration_order, "Levin transform order");
    sub->add_option("--panel-rule", rc.panel_rule, "Gauss-Legendre points per panel");
}

}  // namespace

int execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Implied-volatility smiles and small-maturity asymptotics for exponential Levy models",
                 "levysmile"};
    app.require_subcommand(1);
    RunConfig rc;

    CLI::App* smile = app.add_subcommand("smile", "Write smile CSV and JSON sidecar per maturity");
    add_model_options(smile, rc);
    add_maturity_options(smile, rc);
    add_quadrature_options(smile, rc);
    smile->add_option("--grid", rc.grid, "Log-strike grid lo:hi:n (default -0.5:0.5:101)");
    smile->add_option("--out", rc.out_dir, "Output directory");

    CLI::App* slope = app.add_subcommand("slope", "ATM slope report");
    add_model_options(slope, rc);
    add_maturity_options(slope, rc);
    add_quadrature_options(slope, rc);
    slope->add_option("--format", rc.format)->check(CLI::IsMember({"csv", "json"}));

    CLI::App* digital = app.add_subcommand("digital", "ATM digital prices and their limit");
    add_model_options(digital, rc);
    add_maturity_options(digital, rc);
    add_quadrature_options(digital, rc);
    digital->add_option("--format", rc.format)->check(CLI::IsMember({"csv", "json"}));

    CLI::App* wings = app.add_subcommand("wings", "Lee wing asymptotes");
    add_model_options(wings, rc);
    add_maturity_options(wings, rc);
    wings->add_option("--format", rc.format)->check(CLI::IsMember({"csv", "json"}));

    CLI::App* verify_cmd = app.add_subcommand("verify", "Run the acceptance suite");
    verify_cmd->add_option("--only", rc.only, "Criterion ids to run");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (*smile) return run_smile(rc, out);
        if (*slope) return run_slope(rc, out);
        if (*digital) return run_digital(rc, out);
        if (*wings) return run_wings(rc, out);
        return run_verify(rc, out);
    } catch (const Error& e) {
        err << "levysmile: " << e.what() << '\n';
        return is_numerical(e.code()) ? kExitNumerical : kExitInput;
    } catch (const std::exception& e) {
        err << "levysmile: " << e.what() << '\n';
        return kExitInput;
    }
}

}  // namespace levysmile::cli
