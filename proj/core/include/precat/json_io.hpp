#ifndef PRECAT_JSON_IO_HPP
#define PRECAT_JSON_IO_HPP

#include <nlohmann/json.hpp>
#include <utility>

#include "precat/expr.hpp"
#include "precat/polymap.hpp"
#include "precat/polyplex.hpp"
#include "precat/presheaf.hpp"

namespace precat {

using nlohmann::json;

json cell_to_json(const CellPtr& u);
CellPtr cell_from_json(const json& j);  // throws InputError on malformed data

json expr_to_json(const ExprPtr& e);
ExprPtr expr_from_json(const json& j);

// Accepts either the text grammar (a JSON string) or the structured form.
ExprPtr expr_from_json_or_text(const json& j);

// {"generators":[{"name":...,"dim":...,"src":EXPR,"tgt":EXPR},...]}
// Boundary expressions are normalized against the lower dimensions while
// loading; problems are collected in the report rather than thrown.
json polygraph_to_json(const Polygraph& P);
std::pair<Polygraph, ValidationReport> polygraph_from_json(const json& j);

// {"src":POLYGRAPH,"tgt":POLYGRAPH,"map":{"0":{"x":"p"},...}}
json polymap_to_json(const PolyMap& F);
std::pair<PolyMap, ValidationReport> polymap_from_json(const json& j);

json report_to_json(const ValidationReport& rep);
json lifting_to_json(const PolyplexLifting& L);
json makkai_to_json(const MakkaiReport& rep);

}  // namespace precat

#endif
