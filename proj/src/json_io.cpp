#include "zxw/json_io.hpp"

#include <stdexcept>

namespace zxw {

using nlohmann::json;

json cyclo_json(const Cyclo& c)
{
    json coords = json::array();
    for (int i = 0; i < 4; ++i)
        coords.push_back({{"num", c.coeff(i).numerator().str()}, {"exp", c.coeff(i).exponent()}});
    return coords;
}

Cyclo cyclo_from_json(const json& j)
{
    if (!j.is_array() || j.size() != 4)
        throw std::invalid_argument("cyclo_from_json: expected 4 dyadic coordinates");
    Dyadic d[4];
    for (int i = 0; i < 4; ++i)
        d[i] = Dyadic(BigInt(j[static_cast<std::size_t>(i)].at("num").get<std::string>()),
                      j[static_cast<std::size_t>(i)].at("exp").get<std::int64_t>());
    return Cyclo(d[0], d[1], d[2], d[3]);
}

json matrix_json(const AnyMatrix& m)
{
    json rows = json::array();
    FloatMatrix f = m.as_float();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index k = 0; k < m.cols(); ++k) {
            json e = {{"re", f(i, k).real()}, {"im", f(i, k).imag()}};
            if (m.is_exact())
                e["dyadic"] = cyclo_json(m.exact()(i, k));
            row.push_back(std::move(e));
        }
        rows.push_back(std::move(row));
    }
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"exact", m.is_exact()}, {"entries", rows}};
}

AnyMatrix matrix_from_json(const json& j)
{
    auto rows = j.at("rows").get<Eigen::Index>();
    auto cols = j.at("cols").get<Eigen::Index>();
    const json& e = j.at("entries");
    if (!e.is_array() || static_cast<Eigen::Index>(e.size()) != rows)
        throw std::invalid_argument("matrix_from_json: row count mismatch");
    if (j.at("exact").get<bool>()) {
        ExactMatrix m(rows, cols);
        for (Eigen::Index i = 0; i < rows; ++i)
            for (Eigen::Index k = 0; k < cols; ++k)
                m(i, k) = cyclo_from_json(e.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(k)).at("dyadic"));
        return {m};
    }
    FloatMatrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index k = 0; k < cols; ++k) {
            const json& x = e.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(k));
            m(i, k) = {x.at("re").get<double>(), x.at("im").get<double>()};
        }
    return {m};
}

json rule_report_json(const RuleReport& r)
{
    json fails = json::array();
    for (const auto& f : r.failures) {
        json x = {{"binding", f.binding}, {"variant", f.variant}};
        if (!f.error.empty())
            x["error"] = f.error;
        else {
            x["lhs_matrix"] = matrix_json(f.lhs);
            x["rhs_matrix"] = matrix_json(f.rhs);
        }
        fails.push_back(std::move(x));
    }
    return {{"rule", r.rule},
            {"instances", r.instances()},
            {"exact_instances", r.exact_instances},
            {"float_instances", r.float_instances},
            {"exhaustive", r.exhaustive},
            {"pass", r.pass()},
            {"failure_count", r.failure_count},
            {"failures", fails}};
}

json report_json(const Report& r)
{
    json rules = json::array();
    for (const auto& rr : r.rules)
        rules.push_back(rule_report_json(rr));
    return {{"set", r.set}, {"pass", r.pass()}, {"rules", rules}};
}

json proof_report_json(const ProofReport& r)
{
    json steps = json::array();
    for (const auto& s : r.steps)
        steps.push_back({{"index", s.index},
                         {"rules", s.rules},
                         {"unknown_rules", s.unknown_rules},
                         {"equal", s.equal},
                         {"mode", s.mode},
                         {"pass", s.pass()},
                         {"message", s.message}});
    json j = {{"name", r.name}, {"set", r.set}, {"pass", r.pass()}, {"steps", steps}};
    j["failed_at"] = r.failed_at < 0 ? json(nullptr) : json(r.failed_at);
    return j;
}

json trace_json(const std::vector<TraceStep>& t)
{
    json a = json::array();
    for (const auto& s : t)
        a.push_back({{"schema", s.schema}, {"nodes", s.nodes}, {"nodes_before", s.nodes_before}, {"nodes_after", s.nodes_after}});
    return a;
}

} // namespace zxw
