// cqt: command-line front end for quiver mutation, finite-type detection and
// relation synthesis. See README.md for the subcommands.

#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cqt/error.hpp"
#include "cqt/json_io.hpp"
#include "cqt/named.hpp"
#include "cqt/service.hpp"

namespace {

using namespace cqt;

void print_quiver(const Quiver& q, OutputFormat format) {
  switch (format) {
    case OutputFormat::Json: std::cout << quiver_to_json(q).dump(2) << '\n'; break;
    case OutputFormat::Dot: std::cout << quiver_to_dot(q); break;
    case OutputFormat::Text: std::cout << quiver_to_text(q); break;
  }
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(item);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cluster-tilted quiver toolkit"};
  app.require_subcommand(1);

  SessionConfig config;
  std::string format = "json";
  std::string input;
  std::vector<std::string> at, drop, params;
  std::string order;
  std::string family;
  std::string bind = "127.0.0.1:8080";
  bool algebra = false;
  std::size_t rank = 4;
  double density = 0.5;
  int max_mult = 1;
  std::size_t budget = 0;

  auto add_common = [&](CLI::App* sub, bool budgets) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "dot", "text"}));
    if (budgets) {
      sub->add_option("--budget", budget, "Maximum quivers explored (default 50000 or $CQT_BUDGET)")
          ->check(CLI::PositiveNumber);
      sub->add_option("--jobs", config.jobs, "Worker threads for class expansion")->check(CLI::PositiveNumber);
    }
  };

  auto* mutate_cmd = app.add_subcommand("mutate", "Mutate a quiver at a sequence of vertices");
  mutate_cmd->add_option("input", input, "Quiver JSON file")->required();
  mutate_cmd->add_option("--at", at, "Vertex to mutate at (repeatable, applied left to right)")->required();
  add_common(mutate_cmd, false);

  auto* factor_cmd = app.add_subcommand("factor", "Delete vertices and their arrows");
  factor_cmd->add_option("input", input, "Quiver JSON file")->required();
  factor_cmd->add_option("--drop", drop, "Vertex to delete (repeatable)")->required();
  add_common(factor_cmd, false);

  auto* relations_cmd = app.add_subcommand("relations", "Synthesize the defining relations");
  relations_cmd->add_option("input", input, "Quiver JSON file")->required();
  relations_cmd->add_flag("--algebra", algebra, "Also complete the rewrite system and report the algebra");
  relations_cmd->add_flag("--force", config.force, "Skip the finite-type check");
  relations_cmd->add_option("--order", order, "Comma-separated vertex order for the path order");
  relations_cmd->add_option("--ceiling", config.completion_ceiling, "Path length ceiling for completion");
  add_common(relations_cmd, true);

  auto* typecheck_cmd = app.add_subcommand("typecheck", "Decide finite cluster type");
  typecheck_cmd->add_option("input", input, "Quiver JSON file")->required();
  add_common(typecheck_cmd, true);

  auto* class_cmd = app.add_subcommand("class", "Enumerate the mutation class");
  class_cmd->add_option("input", input, "Quiver JSON file")->required();
  add_common(class_cmd, true);

  auto* dpa_cmd = app.add_subcommand("dpa", "Decide double path avoidance");
  dpa_cmd->add_option("input", input, "Quiver JSON file")->required();
  add_common(dpa_cmd, true);

  auto* make_cmd = app.add_subcommand("make", "Build a named quiver: C n | G a b | T a b | dynkin X_n | "
                                              "kronecker | alternating-cycle n");
  make_cmd->add_option("family", family, "Quiver family")->required();
  make_cmd->add_option("params", params, "Family parameters");
  add_common(make_cmd, false);

  auto* random_cmd = app.add_subcommand("random", "Seeded random quiver");
  random_cmd->add_option("--rank", rank, "Number of vertices");
  random_cmd->add_option("--seed", config.seed, "RNG seed");
  random_cmd->add_option("--density", density, "Probability of an arrow between two vertices")
      ->check(CLI::Range(0.0, 1.0));
  random_cmd->add_option("--max-mult", max_mult, "Largest multiplicity")->check(CLI::PositiveNumber);
  add_common(random_cmd, false);

  auto* serve_cmd = app.add_subcommand("serve", "Run the JSON service");
  serve_cmd->add_option("--bind", bind, "host:port to listen on");
  serve_cmd->add_option("--budget", budget, "Default exploration budget")->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    const SessionConfig env = SessionConfig::from_environment();
    config.class_budget = budget ? budget : env.class_budget;
    config.format = parse_output_format(format);
    if (!order.empty()) config.vertex_order = split_commas(order);

    if (*mutate_cmd) {
      const Quiver q = read_quiver_file(input);
      print_quiver(replay(q, mutation_trace(at)), config.format);
    } else if (*factor_cmd) {
      print_quiver(factor(read_quiver_file(input), drop), config.format);
    } else if (*make_cmd) {
      print_quiver(make_named_quiver(family, params), config.format);
    } else if (*random_cmd) {
      print_quiver(random_quiver(rank, config.seed, density, max_mult), config.format);
    } else if (*relations_cmd) {
      const Quiver q = read_quiver_file(input);
      const json payload = relations_payload(q, config, algebra);
      if (config.format == OutputFormat::Text) {
        std::cout << relation_set_to_text(synthesize_relations(q));
        if (algebra)
          std::cout << algebra_report_to_text(
              build_rewrite_system(q, synthesize_relations(q), config.rewrite_options()));
      } else {
        std::cout << payload.dump(2) << '\n';
      }
    } else if (*typecheck_cmd) {
      const Quiver q = read_quiver_file(input);
      if (config.format == OutputFormat::Text)
        std::cout << type_verdict_to_text(is_finite_cluster_type(q, config.explore_options()));
      else
        std::cout << typecheck_payload(q, config).dump(2) << '\n';
    } else if (*class_cmd) {
      const Quiver q = read_quiver_file(input);
      if (config.format == OutputFormat::Text)
        std::cout << mutation_class_to_text(enumerate_class(q, config.explore_options()));
      else
        std::cout << class_payload(q, config).dump(2) << '\n';
    } else if (*dpa_cmd) {
      const Quiver q = read_quiver_file(input);
      if (config.format == OutputFormat::Text)
        std::cout << dpa_verdict_to_text(is_double_path_avoiding(q, config.explore_options()));
      else
        std::cout << dpa_payload(q, config).dump(2) << '\n';
    } else if (*serve_cmd) {
      const auto colon = bind.rfind(':');
      if (colon == std::string::npos) throw InvalidParameters("--bind expects host:port");
      const std::string host = bind.substr(0, colon);
      const int port = std::stoi(bind.substr(colon + 1));
      ApiServer server(config);
      const int bound = server.bind(host, port);
      if (bound < 0) {
        std::cerr << "error: cannot bind " << bind << '\n';
        return 1;
      }
      std::cerr << "listening on " << host << ':' << bound << '\n';
      return server.serve() ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
