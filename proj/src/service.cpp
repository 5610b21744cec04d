#include "cqt/service.hpp"

#include <httplib.h>

#include "cqt/error.hpp"
#include "cqt/relations.hpp"

namespace cqt {

json mutate_payload(const Quiver& q, const std::vector<std::string>& sequence) {
  return quiver_to_json(replay(q, mutation_trace(sequence)));
}

json relations_payload(const Quiver& q, const SessionConfig& config, bool with_algebra) {
  if (!config.force) {
    const TypeVerdict verdict = is_finite_cluster_type(q, config.explore_options());
    if (verdict.kind == TypeVerdict::Kind::Infinite)
      throw InfiniteType("quiver is not of finite cluster type; pass --force to synthesize anyway");
    if (verdict.kind == TypeVerdict::Kind::BudgetExceeded)
      throw TypeUndetermined("finite type not established within budget " +
                             std::to_string(config.class_budget) + "; pass --force to synthesize anyway");
  } else if (!q.multiplicity_free()) {
    throw InfiniteType("quiver has a multiple arrow; relations need a multiplicity-free quiver");
  }
  const RelationSet relations = synthesize_relations(q);
  json out = relation_set_to_json(relations);
  if (with_algebra)
    out["algebra"] = algebra_report_to_json(build_rewrite_system(q, relations, config.rewrite_options()));
  return out;
}

json typecheck_payload(const Quiver& q, const SessionConfig& config) {
  return type_verdict_to_json(is_finite_cluster_type(q, config.explore_options()));
}

json class_payload(const Quiver& q, const SessionConfig& config) {
  return mutation_class_to_json(enumerate_class(q, config.explore_options()));
}

json dpa_payload(const Quiver& q, const SessionConfig& config) {
  return dpa_verdict_to_json(is_double_path_avoiding(q, config.explore_options()));
}

int exit_code_for(const std::string& code) {
  if (code == "parse-error" || code == "invalid-quiver") return 2;
  if (code == "unknown-vertex") return 3;
  if (code == "three-or-more-shortest-paths") return 4;
  if (code == "infinite-type" || code == "type-undetermined" || code == "multiple-arrows") return 5;
  return 1;
}

int http_status_for(const std::string& code) {
  if (code == "parse-error" || code == "invalid-quiver" || code == "bad-request" ||
      code == "unknown-vertex" || code == "invalid-parameters")
    return 400;
  if (code == "not-found") return 404;
  if (code == "internal") return 500;
  return 422;
}

namespace {

json error_detail(const Error& e) {
  if (const auto* v = dynamic_cast<const UnknownVertex*>(&e)) return {{"vertex", v->label()}};
  if (const auto* t = dynamic_cast<const ThreeOrMoreShortestPaths*>(&e))
    return {{"arrow", {{"from", t->from()}, {"to", t->to()}}}, {"paths", t->paths()}};
  return json::object();
}

ServiceResponse failure(const std::string& code, const std::string& message, json detail = json::object()) {
  return {http_status_for(code), error_envelope(code, message, std::move(detail))};
}

const json& require(const json& body, const char* field) {
  if (!body.contains(field)) throw Error("bad-request", std::string("missing field \"") + field + "\"");
  return body[field];
}

SessionConfig with_budget(const json& body, SessionConfig config) {
  if (body.contains("budget")) {
    const auto& b = body["budget"];
    if (!b.is_number_unsigned() || b.get<std::size_t>() == 0)
      throw Error("bad-request", "\"budget\" must be a positive integer");
    config.class_budget = b.get<std::size_t>();
  }
  return config;
}

ServiceResponse dispatch(const std::string& method, const std::string& path, const std::string& raw,
                         const SessionConfig& defaults) {
  if (path == "/api/health") {
    if (method != "GET") return failure("bad-request", "use GET for " + path);
    return {200, json("ok")};
  }
  if (method != "POST") return failure("not-found", "no route " + method + " " + path);

  json body;
  try {
    body = json::parse(raw);
  } catch (const json::parse_error& e) {
    return failure("bad-request", std::string("malformed JSON body: ") + e.what());
  }
  if (!body.is_object()) return failure("bad-request", "request body must be a JSON object");

  if (path == "/api/mutate") {
    const Quiver q = quiver_from_json(require(body, "quiver"));
    std::vector<std::string> sequence;
    if (body.contains("vertex")) {
      if (!body["vertex"].is_string()) throw Error("bad-request", "\"vertex\" must be a string");
      sequence.push_back(body["vertex"].get<std::string>());
    } else {
      const auto& seq = require(body, "vertices");
      if (!seq.is_array()) throw Error("bad-request", "\"vertices\" must be an array");
      for (const auto& v : seq) {
        if (!v.is_string()) throw Error("bad-request", "vertex labels must be strings");
        sequence.push_back(v.get<std::string>());
      }
    }
    return {200, {{"quiver", mutate_payload(q, sequence)}}};
  }
  if (path == "/api/relations") {
    const Quiver q = quiver_from_json(require(body, "quiver"));
    SessionConfig config = with_budget(body, defaults);
    if (body.contains("force")) {
      if (!body["force"].is_boolean()) throw Error("bad-request", "\"force\" must be a boolean");
      config.force = body["force"].get<bool>();
    }
    if (body.contains("vertex_order")) {
      if (!body["vertex_order"].is_array()) throw Error("bad-request", "\"vertex_order\" must be an array");
      config.vertex_order = body["vertex_order"].get<std::vector<std::string>>();
    }
    return {200, relations_payload(q, config, true)};
  }
  if (path == "/api/typecheck") {
    const Quiver q = quiver_from_json(require(body, "quiver"));
    return {200, typecheck_payload(q, with_budget(body, defaults))};
  }
  if (path == "/api/class") {
    const Quiver q = quiver_from_json(require(body, "quiver"));
    json out = class_payload(q, with_budget(body, defaults));
    out["size"] = out["members"].size();
    return {200, std::move(out)};
  }
  if (path == "/api/dpa") {
    const Quiver q = quiver_from_json(require(body, "quiver"));
    return {200, dpa_payload(q, with_budget(body, defaults))};
  }
  return failure("not-found", "no route " + method + " " + path);
}

}  // namespace

ServiceResponse handle_request(const std::string& method, const std::string& path, const std::string& body,
                               const SessionConfig& defaults) {
  try {
    return dispatch(method, path, body, defaults);
  } catch (const Error& e) {
    return failure(e.code(), e.what(), error_detail(e));
  } catch (const json::exception& e) {
    return failure("bad-request", e.what());
  } catch (const std::exception& e) {
    return failure("internal", e.what());
  }
}

struct ApiServer::Impl {
  httplib::Server server;
};

ApiServer::ApiServer(SessionConfig defaults) : impl_(std::make_unique<Impl>()) {
  auto route = [defaults](const httplib::Request& req, httplib::Response& res) {
    const ServiceResponse out = handle_request(req.method, req.path, req.body, defaults);
    res.status = out.status;
    res.set_content(out.body.dump(), "application/json");
  };
  impl_->server.Get(R"(/api/.*)", route);
  impl_->server.Post(R"(/api/.*)", route);
}

ApiServer::~ApiServer() { stop(); }

int ApiServer::bind(const std::string& host, int port) {
  if (port == 0) return impl_->server.bind_to_any_port(host);
  return impl_->server.bind_to_port(host, port) ? port : -1;
}

bool ApiServer::serve() { return impl_->server.listen_after_bind(); }

void ApiServer::stop() {
  if (impl_) impl_->server.stop();
}

}  // namespace cqt
