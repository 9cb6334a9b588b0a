#include "levysmile/figure_io.hpp"

#include "levysmile/error.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>

namespace levysmile {

std::string format_number(double x) {
    if (std::isnan(x)) return "nan";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void write_smile_csv(const FigureDataset& data, std::ostream& out) {
    out << "k,sigma,price,residual\n";
    for (const SmilePoint& p : data.points) {
        const double nan = std::nan("");
        out << format_number(p.k) << ',' << format_number(p.valid ? p.sigma : nan) << ','
            << format_number(p.valid ? p.price : nan) << ','
            << format_number(p.valid ? p.inversion_residual : nan) << '\n';
    }
}

std::string figure_sidecar_json(const FigureDataset& data) {
    using nlohmann::ordered_json;
    ordered_json doc;
    doc["atm_vol"] = data.atm_vol;
    if (data.atm_tangent) {
        doc["tangent"] = {{"intercept", data.atm_tangent->intercept},
                          {"slope", data.atm_tangent->slope},
                          {"order", std::string(to_string(data.atm_tangent->order))}};
    } else {
        doc["tangent"] = nullptr;
    }
    if (data.lee_lines) {
        doc["lee_lines"] = {{"right", data.lee_lines->right}, {"left", data.lee_lines->left}};
    } else {
        doc["lee_lines"] = nullptr;
    }
    if (data.fd_slope) {
        doc["fd_slope"] = {{"value", data.fd_slope->value}, {"h", data.fd_slope->h}};
    } else {
        doc["fd_slope"] = nullptr;
    }
    ordered_json failed = ordered_json::array();
    for (const SmilePoint& p : data.points) {
        if (!p.valid) failed.push_back({{"k", p.k}, {"diagnostic", p.diagnostic}});
    }
    doc["failed_points"] = failed;
    doc["metadata"] = {{"model", data.metadata.model},
                       {"model_spec", ordered_json::parse(data.metadata.model_json)},
                       {"T", data.metadata.T},
                       {"cfg_digest", data.metadata.cfg_digest},
                       {"notes", data.metadata.notes}};
    return doc.dump(2) + "\n";
}

void write_figure_files(const FigureDataset& data, const std::filesystem::path& dir,
                        const std::string& stem) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
        throw Error(ErrorCode::InvalidInput, "cannot create " + dir.string() + ": " + ec.message());
    }
    std::ofstream csv(dir / (stem + ".csv"), std::ios::binary);
    std::ofstream side(dir / (stem + ".json"), std::ios::binary);
    if (!csv || !side) {
        throw Error(ErrorCode::InvalidInput, "cannot write figure files under " + dir.string());
    }
    write_smile_csv(data, csv);
    side << figure_sidecar_json(data);
}

}  // namespace levysmile
