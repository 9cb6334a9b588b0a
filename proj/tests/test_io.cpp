#include "support.hpp"

#include <levysmile/error.hpp>
#include <levysmile/figure_io.hpp>
#include <levysmile/model_io.hpp>
#include <levysmile/parallel.hpp>
#include <levysmile/smile.hpp>

#include <json.hpp>

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace testing;

TEST_CASE("parse the documented model format", "[io]") {
    const ModelSpec m =
        parse_model(R"({"model": "nig", "params": {"alpha": 8.5, "beta": 2.0, "delta": 1.1}, "drift": "martingale"})");
    CHECK(m.kind() == ModelKind::Nig);
    CHECK(m.is_martingale());
    CHECK_THAT(m.drift(), WithinAbs(-0.339205856699292, 1e-13));
}

TEST_CASE("drift spellings and overrides", "[io]") {
    const std::string base = R"({"model": "VG", "params": {"sigma": 0.2, "nu": 0.5, "theta": -0.02}, "drift": )";
    for (const char* drift : {"0", "{\"explicit\": 0}", "0.0"}) {
        const ModelSpec m = parse_model(base + drift + "}");
        CHECK_FALSE(m.is_martingale());
        CHECK(m.drift() == 0.0);
    }
    const ModelSpec m = parse_model(R"({"model": "bs", "params": {"sigma": 0.2}})", {{"sigma", 0.3}});
    CHECK(m.diffusion_sigma() == 0.3);
    CHECK(m.is_martingale());

    const ModelSpec inline_model = model_from_params("kou", {{"sigma", 1.0}, {"lambda", 15.5}, {"p", 0.219},
                                                            {"lambda_plus", 7.11}, {"lambda_minus", 9.0}});
    CHECK_THAT(inline_model.drift(), WithinAbs(0.154985351882160, 1e-13));
    CHECK(model_from_params("bs", {{"sigma", 0.2}}, "0.01").drift() == 0.01);
}

TEST_CASE("bad model input", "[io]") {
    auto code = [](const std::string& text) {
        try {
            (void)parse_model(text);
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::Overflow;
    };
    CHECK(code("{") == ErrorCode::InvalidInput);
    CHECK(code(R"({"params": {}})") == ErrorCode::InvalidInput);
    CHECK(code(R"({"model": "heston", "params": {}})") == ErrorCode::InvalidInput);
    CHECK(code(R"({"model": "nig", "params": {"alpha": 8.5, "beta": 2.0}})") == ErrorCode::InvalidInput);
    CHECK(code(R"({"model": "bs", "params": {"sigma": 0.2, "rho": 1}})") == ErrorCode::InvalidInput);
    CHECK(code(R"({"model": "bs", "params": {"sigma": "high"}})") == ErrorCode::InvalidInput);
    CHECK(code(R"({"model": "bs", "params": {"sigma": 0.2}, "drift": "zero"})") == ErrorCode::InvalidInput);
    CHECK(code(R"({"model": "bs", "params": {"sigma": -0.2}})") == ErrorCode::InvalidParameter);
    CHECK_THROWS_AS(load_model("/nonexistent/model.json"), Error);
    CHECK_THROWS_AS(model_from_params("bs", {{"sigma", 0.2}}, "up"), Error);
}

TEST_CASE("model JSON round trip", "[io]") {
    for (const ModelSpec& m : all_models()) {
        const ModelSpec back = parse_model(model_to_json(m));
        CHECK(back.kind() == m.kind());
        CHECK(back.drift() == m.drift());
    }
    const ModelSpec explicit_drift = parse_model(model_to_json(vg_zero_drift()));
    CHECK_FALSE(explicit_drift.is_martingale());
}

TEST_CASE("bundled model files load", "[io]") {
    const std::filesystem::path dir = LEVYSMILE_MODELS_DIR;
    for (const char* name : {"nig", "kou", "cgmy", "merton", "vg", "meixner", "blackscholes"}) {
        INFO(name);
        CHECK_NOTHROW(load_model(dir / (std::string(name) + ".json")));
    }
}

TEST_CASE("number formatting", "[io]") {
    CHECK(format_number(0.1) == "0.10000000000000001");
    CHECK(format_number(-2.0) == "-2");
    CHECK(format_number(std::nan("")) == "nan");
    for (const double x : {0.1, 1.0 / 3.0, 1e-300, 123456.789}) {
        CHECK(std::stod(format_number(x)) == x);
    }
}

TEST_CASE("smile CSV and sidecar", "[io]") {
    FigureDataset d = figure_report(nig(), 0.1, linear_grid(-0.2, 0.2, 5));
    d.points[1].valid = false;
    d.points[1].diagnostic = "forced";
    std::ostringstream csv;
    write_smile_csv(d, csv);
    std::istringstream lines(csv.str());
    std::string line;
    std::getline(lines, line);
    CHECK(line == "k,sigma,price,residual");
    int rows = 0;
    while (std::getline(lines, line)) {
        ++rows;
        if (rows == 2) CHECK(line.find("nan") != std::string::npos);
    }
    CHECK(rows == 5);

    const auto doc = nlohmann::json::parse(figure_sidecar_json(d));
    CHECK(doc["atm_vol"].get<double>() == d.atm_vol);
    CHECK(doc["tangent"]["slope"].get<double>() == d.atm_tangent->slope);
    CHECK(doc["lee_lines"]["right"].get<double>() == d.lee_lines->right);
    CHECK(doc["metadata"]["model"] == "nig");
    CHECK(doc["metadata"]["model_spec"]["params"]["alpha"].get<double>() == 8.5);
    CHECK(doc["failed_points"].size() == 1);
}

TEST_CASE("figure files are byte-identical across runs", "[io]") {
    const auto dir = std::filesystem::temp_directory_path() / "levysmile_io_test";
    std::filesystem::remove_all(dir);
    auto slurp = [](const std::filesystem::path& p) {
        std::ifstream in(p);
        std::ostringstream s;
        s << in.rdbuf();
        return s.str();
    };
    const auto grid = linear_grid(-0.3, 0.3, 13);
    write_figure_files(figure_report(nig(), 0.05, grid), dir, "a");
    write_figure_files(figure_report(nig(), 0.05, grid), dir, "b");
    CHECK(slurp(dir / "a.csv") == slurp(dir / "b.csv"));
    CHECK(slurp(dir / "a.json") == slurp(dir / "b.json"));
    CHECK_FALSE(slurp(dir / "a.csv").empty());
    std::filesystem::remove_all(dir);
}

TEST_CASE("parallel loop", "[parallel]") {
    std::vector<int> hits(1000, 0);
    parallel_for(hits.size(), [&](std::size_t i) { hits[i] += 1; });
    CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
    CHECK_THROWS_AS(parallel_for(10, [](std::size_t i) {
                        if (i == 7) throw std::runtime_error("boom");
                    }),
                    std::runtime_error);
    CHECK(thread_count() >= 1);
    parallel_for(0, [](std::size_t) { FAIL("no work expected"); });
}
