#pragma once

#include <nlohmann/json.hpp>

#include "zxw/axioms.hpp"
#include "zxw/proof.hpp"
#include "zxw/rewrite.hpp"
#include "zxw/ring.hpp"

namespace zxw {

// {"rows","cols","exact","entries":[[{"re","im"[,"dyadic":[{"num","exp"} x4]]}]]}
nlohmann::json matrix_json(const AnyMatrix& m);
nlohmann::json cyclo_json(const Cyclo& c);
Cyclo cyclo_from_json(const nlohmann::json& j);
// exact entries are rebuilt from their dyadic coordinates
AnyMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json report_json(const Report& r);
nlohmann::json rule_report_json(const RuleReport& r);
nlohmann::json proof_report_json(const ProofReport& r);
nlohmann::json trace_json(const std::vector<TraceStep>& t);

} // namespace zxw
