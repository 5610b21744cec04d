#pragma once

// Request handlers shared by the command line and the HTTP service. Each
// payload builder returns exactly the JSON document the CLI prints with
// --format json, so both surfaces stay byte-identical.

#include <memory>
#include <string>

#include "cqt/json_io.hpp"
#include "cqt/session.hpp"

namespace cqt {

json mutate_payload(const Quiver& q, const std::vector<std::string>& sequence);

/// Relations (and, with `with_algebra`, the completed-system report under
/// "algebra"). Unless config.force, first establishes finite type and throws
/// InfiniteType or TypeUndetermined otherwise.
json relations_payload(const Quiver& q, const SessionConfig& config, bool with_algebra);

json typecheck_payload(const Quiver& q, const SessionConfig& config);
json class_payload(const Quiver& q, const SessionConfig& config);
json dpa_payload(const Quiver& q, const SessionConfig& config);

/// CLI exit code for an error code: 2 parse, 3 unknown vertex, 4 three or
/// more shortest paths, 5 infinite type, 1 otherwise.
int exit_code_for(const std::string& error_code);

/// HTTP status for an error code.
int http_status_for(const std::string& error_code);

struct ServiceResponse {
  int status = 200;
  json body;
};

/// Dispatches one API call. `path` is e.g. "/api/mutate"; `body` is the raw
/// request body. Never throws; failures come back as error envelopes.
ServiceResponse handle_request(const std::string& method, const std::string& path,
                               const std::string& body, const SessionConfig& defaults);

/// HTTP front end for handle_request. Stateless; one instance per listener.
class ApiServer {
 public:
  explicit ApiServer(SessionConfig defaults);
  ~ApiServer();
  ApiServer(const ApiServer&) = delete;
  ApiServer& operator=(const ApiServer&) = delete;

  /// Binds host:port (port 0 picks a free port). Returns the bound port or -1.
  int bind(const std::string& host, int port);
  /// Blocks until stop(). Returns false if the listener failed.
  bool serve();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace cqt
