#include "cqt/json_io.hpp"

#include <fstream>
#include <sstream>

#include "cqt/error.hpp"

namespace cqt {

json quiver_to_json(const Quiver& q) {
  json arrows = json::array();
  for (const auto& a : q.arrows())
    arrows.push_back({{"from", a.source}, {"to", a.target}, {"mult", a.multiplicity}});
  return {{"vertices", q.vertices()}, {"arrows", std::move(arrows)}};
}

Quiver quiver_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("quiver must be a JSON object");
  if (!j.contains("vertices") || !j["vertices"].is_array())
    throw ParseError("quiver needs a \"vertices\" array");
  std::vector<std::string> vertices;
  for (const auto& v : j["vertices"]) {
    if (!v.is_string()) throw ParseError("vertex labels must be strings");
    vertices.push_back(v.get<std::string>());
  }
  std::vector<Arrow> arrows;
  if (j.contains("arrows")) {
    if (!j["arrows"].is_array()) throw ParseError("\"arrows\" must be an array");
    for (const auto& a : j["arrows"]) {
      if (!a.is_object() || !a.contains("from") || !a.contains("to") || !a["from"].is_string() ||
          !a["to"].is_string())
        throw ParseError("each arrow needs string \"from\" and \"to\"");
      int mult = 1;
      if (a.contains("mult")) {
        if (!a["mult"].is_number_integer()) throw ParseError("\"mult\" must be an integer");
        mult = a["mult"].get<int>();
      }
      arrows.push_back({a["from"].get<std::string>(), a["to"].get<std::string>(), mult});
    }
  }
  try {
    return Quiver::from_arrows(std::move(vertices), arrows);
  } catch (const UnknownVertex& e) {
    throw InvalidQuiver(std::string("arrow endpoint: ") + e.what());
  }
}

Quiver quiver_from_string(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return quiver_from_json(j);
}

Quiver read_quiver_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return quiver_from_string(buffer.str());
}

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string quiver_to_dot(const Quiver& q) {
  std::ostringstream out;
  out << "digraph quiver {\n";
  for (const auto& v : q.vertices()) out << "  " << quoted(v) << ";\n";
  for (const auto& a : q.arrows())
    for (int k = 0; k < a.multiplicity; ++k)
      out << "  " << quoted(a.source) << " -> " << quoted(a.target) << ";\n";
  out << "}\n";
  return out.str();
}

std::string quiver_to_text(const Quiver& q) {
  std::ostringstream out;
  out << "vertices:";
  for (const auto& v : q.vertices()) out << ' ' << v;
  out << '\n';
  for (const auto& a : q.arrows()) {
    out << a.source << " -> " << a.target;
    if (a.multiplicity > 1) out << " (x" << a.multiplicity << ')';
    out << '\n';
  }
  return out.str();
}

json trace_to_json(const Trace& trace) {
  json out = json::array();
  for (const auto& step : trace) out.push_back(step.to_string());
  return out;
}

json mutation_class_to_json(const MutationClass& mc) {
  json members = json::array();
  for (const auto& m : mc.members)
    members.push_back({{"quiver", quiver_to_json(m.quiver)}, {"trace", trace_to_json(m.trace)}});
  return {{"seed", quiver_to_json(mc.seed)}, {"complete", mc.complete}, {"members", std::move(members)}};
}

json dynkin_to_json(const DynkinLabel& label) {
  return {{"family", std::string(1, label.family_letter())}, {"rank", label.rank()}};
}

namespace {

json witness_to_json(const Witness& w) {
  return {{"quiver", quiver_to_json(w.quiver)}, {"trace", trace_to_json(w.trace)}};
}

}  // namespace

json type_verdict_to_json(const TypeVerdict& verdict) {
  json out;
  switch (verdict.kind) {
    case TypeVerdict::Kind::Finite: out["kind"] = "finite"; break;
    case TypeVerdict::Kind::Infinite: out["kind"] = "infinite"; break;
    case TypeVerdict::Kind::BudgetExceeded: out["kind"] = "budget-exceeded"; break;
  }
  if (verdict.dynkin) out["dynkin"] = dynkin_to_json(*verdict.dynkin);
  if (verdict.witness) out["witness"] = witness_to_json(*verdict.witness);
  out["explored"] = verdict.explored;
  return out;
}

json dpa_verdict_to_json(const DpaVerdict& verdict) {
  json out;
  switch (verdict.kind) {
    case DpaVerdict::Kind::Avoiding:
      out["kind"] = "avoiding";
      out["dpa"] = true;
      break;
    case DpaVerdict::Kind::NotAvoiding:
      out["kind"] = "not-avoiding";
      out["dpa"] = false;
      break;
    case DpaVerdict::Kind::BudgetExceeded:
      out["kind"] = "budget-exceeded";
      out["dpa"] = nullptr;
      break;
  }
  if (verdict.witness) out["witness"] = witness_to_json(*verdict.witness);
  out["explored"] = verdict.explored;
  return out;
}

json path_to_json(const Path& p) { return p.vertices; }

json relation_set_to_json(const RelationSet& rs) {
  json relations = json::array();
  for (const auto& r : rs.relations) {
    json paths = json::array({path_to_json(r.first)});
    if (r.second) paths.push_back(path_to_json(*r.second));
    relations.push_back({{"arrow", {{"from", r.arrow_source}, {"to", r.arrow_target}}},
                         {"kind", r.kind == Relation::Kind::Zero ? "zero" : "commutativity"},
                         {"paths", std::move(paths)}});
  }
  return {{"quiver", quiver_to_json(rs.quiver)}, {"relations", std::move(relations)}};
}

std::string relation_set_to_text(const RelationSet& rs) {
  std::string out;
  for (const auto& r : rs.relations) out += r.to_string() + "\n";
  if (rs.relations.empty()) out += "(no relations)\n";
  return out;
}

json algebra_report_to_json(const RewriteSystem& rs) {
  const auto& vertices = rs.quiver().vertices();
  json hom = json::array();
  for (const auto& u : vertices)
    for (const auto& v : vertices) hom.push_back({{"from", u}, {"to", v}, {"dim", rs.hom_dimension(u, v)}});
  json lengths = json::object();
  for (const auto& [v, n] : rs.projective_lengths()) lengths[v] = n;
  json rules = json::array();
  for (const auto& r : rs.rules()) {
    json rule = {{"lhs", path_to_json(r.lhs)}};
    rule["rhs"] = r.rhs ? path_to_json(*r.rhs) : json("0");
    if (r.rhs && r.coefficient != 1) rule["coef"] = r.coefficient.get_str();
    rules.push_back(std::move(rule));
  }
  return {{"dimension", rs.algebra_dimension()},
          {"hom", std::move(hom)},
          {"projective_lengths", std::move(lengths)},
          {"rules", std::move(rules)}};
}

std::string algebra_report_to_text(const RewriteSystem& rs) {
  std::ostringstream out;
  const auto& vertices = rs.quiver().vertices();
  out << "dimension: " << rs.algebra_dimension() << '\n';
  out << "projective lengths:";
  for (const auto& [v, n] : rs.projective_lengths()) out << ' ' << v << '=' << n;
  out << "\nhom (paths from row to column modulo the ideal):\n";
  for (const auto& u : vertices) {
    out << "  " << u << ':';
    for (const auto& v : vertices) out << ' ' << rs.hom_dimension(u, v);
    out << '\n';
  }
  out << "rules:\n";
  for (const auto& r : rs.rules()) {
    out << "  " << r.lhs.to_string() << "  =>  ";
    if (!r.rhs)
      out << '0';
    else if (r.coefficient == 1)
      out << r.rhs->to_string();
    else
      out << r.coefficient.get_str() << " * " << r.rhs->to_string();
    out << '\n';
  }
  return out.str();
}

std::string type_verdict_to_text(const TypeVerdict& verdict) {
  std::ostringstream out;
  switch (verdict.kind) {
    case TypeVerdict::Kind::Finite: out << "finite " << verdict.dynkin->to_string(); break;
    case TypeVerdict::Kind::Infinite: out << "infinite"; break;
    case TypeVerdict::Kind::BudgetExceeded: out << "budget exceeded"; break;
  }
  out << " (explored " << verdict.explored << ")\n";
  if (verdict.witness) {
    out << "witness trace:";
    for (const auto& step : verdict.witness->trace) out << " [" << step.to_string() << ']';
    out << '\n' << quiver_to_text(verdict.witness->quiver);
  }
  return out.str();
}

std::string dpa_verdict_to_text(const DpaVerdict& verdict) {
  std::ostringstream out;
  switch (verdict.kind) {
    case DpaVerdict::Kind::Avoiding: out << "double path avoiding"; break;
    case DpaVerdict::Kind::NotAvoiding: out << "not double path avoiding"; break;
    case DpaVerdict::Kind::BudgetExceeded: out << "budget exceeded"; break;
  }
  out << " (explored " << verdict.explored << ")\n";
  if (verdict.witness) {
    out << "witness trace:";
    for (const auto& step : verdict.witness->trace) out << " [" << step.to_string() << ']';
    out << '\n' << quiver_to_text(verdict.witness->quiver);
  }
  return out.str();
}

std::string mutation_class_to_text(const MutationClass& mc) {
  std::ostringstream out;
  out << mc.members.size() << " members" << (mc.complete ? " (complete)" : " (incomplete)") << '\n';
  for (std::size_t i = 0; i < mc.members.size(); ++i) {
    const auto& m = mc.members[i];
    out << "# member " << i + 1 << ", trace:";
    for (const auto& step : m.trace) out << " [" << step.to_string() << ']';
    out << '\n' << quiver_to_text(m.quiver);
  }
  return out.str();
}

json error_envelope(const std::string& code, const std::string& message, json detail) {
  return {{"code", code}, {"message", message}, {"detail", std::move(detail)}};
}

}  // namespace cqt
