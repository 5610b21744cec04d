#pragma once

#include <string>

#include "json.hpp"

#include "cqt/mutation_class.hpp"
#include "cqt/path_algebra.hpp"
#include "cqt/quiver.hpp"
#include "cqt/relations.hpp"

namespace cqt {

using nlohmann::json;

/// {"vertices": [...], "arrows": [{"from", "to", "mult"}, ...]}
json quiver_to_json(const Quiver& q);
/// Throws ParseError on malformed structure and InvalidQuiver on loops,
/// antiparallel or duplicated arrows, or unknown endpoints.
Quiver quiver_from_json(const json& j);
Quiver quiver_from_string(const std::string& text);
Quiver read_quiver_file(const std::string& path);

/// One statement per arrow copy, vertices in quiver order.
std::string quiver_to_dot(const Quiver& q);
std::string quiver_to_text(const Quiver& q);

json trace_to_json(const Trace& trace);
json mutation_class_to_json(const MutationClass& mc);
json type_verdict_to_json(const TypeVerdict& verdict);
json dpa_verdict_to_json(const DpaVerdict& verdict);
json dynkin_to_json(const DynkinLabel& label);

json path_to_json(const Path& p);
json relation_set_to_json(const RelationSet& rs);
std::string relation_set_to_text(const RelationSet& rs);

/// {"dimension", "hom": [{"from","to","dim"}], "projective_lengths": {v: n},
///  "rules": [{"lhs": path, "rhs": "0" | path}]}. A rule whose coefficient is
/// not 1 also carries "coef" as a rational string.
json algebra_report_to_json(const RewriteSystem& rs);
std::string algebra_report_to_text(const RewriteSystem& rs);

std::string type_verdict_to_text(const TypeVerdict& verdict);
std::string dpa_verdict_to_text(const DpaVerdict& verdict);
std::string mutation_class_to_text(const MutationClass& mc);

json error_envelope(const std::string& code, const std::string& message, json detail = json::object());

}  // namespace cqt
