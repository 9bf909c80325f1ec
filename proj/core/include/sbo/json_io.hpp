#pragma once

#include <json.hpp>

#include "sbo/singular.hpp"
#include "sbo/verify.hpp"

namespace sbo {

using nlohmann::json;

json rational_to_json(const GaussianRational& g);
GaussianRational rational_from_json(const json& j);

json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const json& j);

json form_to_json(const PolyForm& w);
PolyForm form_from_json(const json& j);

json op_to_json(const OpExpr& e);

json singular_to_json(const SingularVector& v);

json suite_report_to_json(const SuiteReport& r);
json intertwining_report_to_json(const IntertwiningReport& r);
json annihilation_report_to_json(const AnnihilationReport& r);

}  // namespace sbo
