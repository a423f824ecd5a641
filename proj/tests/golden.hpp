#pragma once

#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "zxw/diagram.hpp"
#include "zxw/json_io.hpp"

namespace zxw::gold {

struct Golden {
    std::string name;
    Diagram diagram;
    ExactMatrix matrix;
};

inline Diagram golden_diagram(const nlohmann::json& g)
{
    const std::string kind = g.at("kind");
    const int n = g.at("inputs"), m = g.at("outputs");
    auto phase = [&] { return Phase::pi4(g.at("phase_pi4").get<int>()); };
    auto param = [&] { return Param(cyclo_from_json(g.at("param"))); };
    if (kind == "H")
        return had();
    if (kind == "Z")
        return zsp(phase(), n, m);
    if (kind == "X")
        return xsp(phase(), n, m);
    if (kind == "cup")
        return cup();
    if (kind == "cap")
        return cap();
    if (kind == "swap")
        return swap();
    if (kind == "black-1-1")
        return black_not();
    if (kind == "black-1-2")
        return black_w();
    if (kind == "white-1-1")
        return white_sign();
    if (kind == "white-2-1")
        return white_merge();
    if (kind == "cross")
        return zw_cross();
    if (kind == "half")
        return half();
    if (kind == "white")
        return white(param(), n, m);
    if (kind == "triangle")
        return triangle(param());
    throw std::runtime_error("golden_diagram: unknown kind " + kind);
}

inline std::vector<Golden> load_golden(const std::string& path)
{
    std::ifstream f(path);
    if (!f)
        throw std::runtime_error("load_golden: cannot open " + path);
    nlohmann::json all = nlohmann::json::parse(f);
    std::vector<Golden> out;
    for (const auto& g : all) {
        const auto& e = g.at("entries");
        ExactMatrix m(static_cast<Eigen::Index>(e.size()), static_cast<Eigen::Index>(e.at(0).size()));
        for (std::size_t i = 0; i < e.size(); ++i)
            for (std::size_t k = 0; k < e[i].size(); ++k)
                m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = cyclo_from_json(e[i][k]);
        out.push_back({g.at("name"), golden_diagram(g), m});
    }
    return out;
}

inline std::string source_path(const std::string& rel) { return std::string(ZXW_SOURCE_DIR) + "/" + rel; }

} // namespace zxw::gold
