#include "cqt/mutation_class.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <unordered_set>

#include "cqt/canonical.hpp"
#include "cqt/error.hpp"

namespace cqt {

std::string TraceStep::to_string() const {
  return (kind == Kind::Mutate ? "mutate " : "drop ") + vertex;
}

TraceStep TraceStep::parse(const std::string& text) {
  const auto space = text.find(' ');
  if (space == std::string::npos || space + 1 >= text.size())
    throw ParseError("bad trace step '" + text + "'");
  const std::string verb = text.substr(0, space);
  std::string vertex = text.substr(space + 1);
  if (verb == "mutate") return mutate(std::move(vertex));
  if (verb == "drop") return drop(std::move(vertex));
  throw ParseError("bad trace step '" + text + "'");
}

Quiver replay(const Quiver& seed, std::span<const TraceStep> trace) {
  Quiver q = seed;
  for (const auto& step : trace) {
    if (step.kind == TraceStep::Kind::Mutate) {
      q = mutate(q, step.vertex);
    } else {
      const std::string drop[] = {step.vertex};
      q = factor(q, drop);
    }
  }
  return q;
}

Trace mutation_trace(std::span<const std::string> vertices) {
  Trace trace;
  for (const auto& v : vertices) trace.push_back(TraceStep::mutate(v));
  return trace;
}

namespace {

struct Node {
  Quiver quiver;  // seed labels
  Trace trace;
  Canonical canonical;
};

enum class Moves { MutateOnly, MutateAndDrop };

struct ExploreResult {
  bool complete = false;
  bool stopped = false;
  std::size_t explored = 0;
};

std::vector<Node> expand(const Node& node, Moves moves) {
  std::vector<Node> children;
  const auto& labels = node.quiver.vertices();
  for (std::size_t k = 0; k < labels.size(); ++k) {
    Node child{mutate(node.quiver, k), node.trace, {}};
    child.trace.push_back(TraceStep::mutate(labels[k]));
    child.canonical = canonicalize(child.quiver);
    children.push_back(std::move(child));
  }
  if (moves == Moves::MutateAndDrop) {
    for (std::size_t k = 0; k < labels.size(); ++k) {
      const std::size_t drop[] = {k};
      Node child{factor_indices(node.quiver, drop), node.trace, {}};
      child.trace.push_back(TraceStep::drop(labels[k]));
      child.canonical = canonicalize(child.quiver);
      children.push_back(std::move(child));
    }
  }
  return children;
}

// Children of a whole BFS level, in frontier order regardless of `jobs`.
std::vector<std::vector<Node>> expand_level(const std::vector<Node>& frontier, Moves moves,
                                            unsigned jobs) {
  std::vector<std::vector<Node>> out(frontier.size());
  if (jobs <= 1 || frontier.size() < 2) {
    for (std::size_t i = 0; i < frontier.size(); ++i) out[i] = expand(frontier[i], moves);
    return out;
  }
  const std::size_t workers = std::min<std::size_t>(jobs, frontier.size());
  std::vector<std::future<void>> tasks;
  for (std::size_t w = 0; w < workers; ++w) {
    tasks.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < frontier.size(); i += workers) out[i] = expand(frontier[i], moves);
    }));
  }
  for (auto& t : tasks) t.get();
  return out;
}

// Visits every new isomorphism class in BFS order. `visit` returns true to
// stop the search.
ExploreResult explore(const Quiver& seed, Moves moves, const ExploreOptions& options,
                      const std::function<bool(const Node&)>& visit) {
  if (options.budget < 1) throw InvalidParameters("budget must be >= 1");
  ExploreResult result;
  std::unordered_set<std::string> seen;

  Node root{seed, {}, canonicalize(seed)};
  seen.insert(root.canonical.key);
  result.explored = 1;
  if (visit(root)) {
    result.stopped = true;
    return result;
  }
  std::vector<Node> frontier;
  frontier.push_back(std::move(root));

  while (!frontier.empty()) {
    auto children = expand_level(frontier, moves, options.jobs);
    std::vector<Node> next;
    for (auto& group : children) {
      for (auto& child : group) {
        if (seen.contains(child.canonical.key)) continue;
        if (seen.size() >= options.budget) return result;
        seen.insert(child.canonical.key);
        ++result.explored;
        if (visit(child)) {
          result.stopped = true;
          return result;
        }
        next.push_back(std::move(child));
      }
    }
    frontier = std::move(next);
  }
  result.complete = true;
  return result;
}

}  // namespace

bool MutationClass::contains(const Quiver& q) const {
  const Quiver canonical = canonical_form(q);
  return std::any_of(members.begin(), members.end(),
                     [&](const ClassMember& m) { return m.quiver == canonical; });
}

MutationClass enumerate_class(const Quiver& seed, const ExploreOptions& options) {
  MutationClass result;
  result.seed = seed;
  const auto outcome = explore(seed, Moves::MutateOnly, options, [&](const Node& node) {
    result.members.push_back(
        {apply_canonical_order(node.quiver, node.canonical.order), node.trace});
    return false;
  });
  result.complete = outcome.complete;
  return result;
}

TypeVerdict is_finite_cluster_type(const Quiver& q, const ExploreOptions& options) {
  TypeVerdict verdict;
  bool decided = false;
  const auto outcome = explore(q, Moves::MutateOnly, options, [&](const Node& node) {
    if (!node.quiver.multiplicity_free()) {
      verdict.kind = TypeVerdict::Kind::Infinite;
    } else if (is_acyclic(node.quiver)) {
      if (auto label = underlying_graph_is_dynkin(node.quiver)) {
        verdict.kind = TypeVerdict::Kind::Finite;
        verdict.dynkin = label;
      } else {
        verdict.kind = TypeVerdict::Kind::Infinite;
      }
    } else {
      return false;
    }
    verdict.witness = Witness{node.quiver, node.trace};
    decided = true;
    return true;
  });
  verdict.explored = outcome.explored;
  if (!decided) {
    // A complete class without an acyclic member cannot be of finite type.
    verdict.kind = outcome.complete ? TypeVerdict::Kind::Infinite : TypeVerdict::Kind::BudgetExceeded;
    if (outcome.complete) verdict.witness = Witness{q, {}};
  }
  return verdict;
}

DpaVerdict is_double_path_avoiding(const Quiver& q, const ExploreOptions& options) {
  DpaVerdict verdict;
  const auto outcome = explore(q, Moves::MutateAndDrop, options, [&](const Node& node) {
    if (node.quiver.multiplicity_free()) return false;
    verdict.kind = DpaVerdict::Kind::NotAvoiding;
    verdict.witness = Witness{node.quiver, node.trace};
    return true;
  });
  verdict.explored = outcome.explored;
  if (!verdict.witness)
    verdict.kind = outcome.complete ? DpaVerdict::Kind::Avoiding : DpaVerdict::Kind::BudgetExceeded;
  return verdict;
}

std::optional<Trace> find_mutation_sequence(const Quiver& src, const Quiver& dst,
                                            const ExploreOptions& options) {
  if (src.rank() != dst.rank()) return std::nullopt;
  const std::string target = canonical_key(dst);
  std::optional<Trace> found;
  explore(src, Moves::MutateOnly, options, [&](const Node& node) {
    if (node.canonical.key != target) return false;
    found = node.trace;
    return true;
  });
  return found;
}

}  // namespace cqt
