#include "cqt/relations.hpp"

#include <algorithm>
#include <set>

#include "cqt/error.hpp"

namespace cqt {

std::string Path::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (i) out += " -> ";
    out += vertices[i];
  }
  return out;
}

std::string Relation::to_string() const {
  if (kind == Kind::Zero) return first.to_string() + " = 0";
  return first.to_string() + " - " + second->to_string() + " = 0";
}

namespace {

void require_multiplicity_free(const Quiver& q) {
  if (!q.multiplicity_free())
    throw MultipleArrows("shortest paths are only defined for quivers without multiple arrows");
}

// DFS from j towards i over vertex-simple paths. A new vertex may only touch
// earlier path vertices through its incoming path arrow, except that the
// final vertex i also carries the closing arrow i -> j.
struct ShortestPathSearch {
  const Quiver& q;
  std::size_t from;  // i
  std::size_t to;    // j
  std::vector<std::size_t> path;
  std::vector<bool> on_path;
  std::vector<std::vector<std::size_t>> found;

  bool chord_free(std::size_t w) const {
    for (std::size_t k = 0; k + 1 < path.size(); ++k) {
      const std::size_t u = path[k];
      if (q.entry(u, w) == 0) continue;
      if (w == from && u == to && q.entry(from, to) > 0) continue;
      return false;
    }
    return true;
  }

  void run(std::size_t u) {
    for (std::size_t w : q.successors(u)) {
      if (on_path[w] || !chord_free(w)) continue;
      path.push_back(w);
      if (w == from) {
        found.push_back(path);
      } else {
        on_path[w] = true;
        run(w);
        on_path[w] = false;
      }
      path.pop_back();
    }
  }
};

std::vector<std::vector<std::size_t>> shortest_paths(const Quiver& q, std::size_t i,
                                                     std::size_t j) {
  ShortestPathSearch search{q, i, j, {j}, std::vector<bool>(q.rank(), false), {}};
  search.on_path[j] = true;
  search.run(j);
  return search.found;
}

Path to_path(const Quiver& q, const std::vector<std::size_t>& indices) {
  Path p;
  for (std::size_t v : indices) p.vertices.push_back(q.label(v));
  return p;
}

}  // namespace

std::vector<Path> enumerate_shortest_paths(const Quiver& q, const std::string& from,
                                           const std::string& to) {
  const std::size_t i = q.index_of(from);
  const std::size_t j = q.index_of(to);
  require_multiplicity_free(q);
  if (!q.has_arrow(i, j)) throw ArrowNotPresent(from, to);
  std::vector<Path> out;
  for (const auto& p : shortest_paths(q, i, j)) out.push_back(to_path(q, p));
  return out;
}

RelationSet synthesize_relations(const Quiver& q) {
  require_multiplicity_free(q);
  RelationSet result{q, {}};
  for (std::size_t i = 0; i < q.rank(); ++i) {
    for (std::size_t j = 0; j < q.rank(); ++j) {
      if (!q.has_arrow(i, j)) continue;
      const auto paths = shortest_paths(q, i, j);
      if (paths.empty()) continue;
      if (paths.size() >= 3) {
        std::vector<std::vector<std::string>> labelled;
        for (const auto& p : paths) labelled.push_back(to_path(q, p).vertices);
        throw ThreeOrMoreShortestPaths(q.label(i), q.label(j), std::move(labelled));
      }
      Relation r;
      r.arrow_source = q.label(i);
      r.arrow_target = q.label(j);
      r.first = to_path(q, paths[0]);
      if (paths.size() == 2) {
        r.kind = Relation::Kind::Commutativity;
        r.second = to_path(q, paths[1]);
      }
      result.relations.push_back(std::move(r));
    }
  }
  return result;
}

bool paths_disjoint(const Path& a, const Path& b) {
  if (a.vertices.empty() || b.vertices.empty()) return false;
  if (a.source() != b.source() || a.target() != b.target()) return false;
  std::set<std::string> inner(a.vertices.begin() + 1, a.vertices.end() - 1);
  for (std::size_t k = 1; k + 1 < b.vertices.size(); ++k)
    if (inner.contains(b.vertices[k])) return false;
  return true;
}

bool paths_disconnected(const Quiver& q, const Path& a, const Path& b) {
  if (!paths_disjoint(a, b)) return false;
  std::set<std::pair<std::size_t, std::size_t>> own;
  std::set<std::size_t> span;
  for (const Path* p : {&a, &b}) {
    for (std::size_t k = 0; k < p->vertices.size(); ++k) {
      span.insert(q.index_of(p->vertices[k]));
      if (k + 1 < p->vertices.size())
        own.emplace(q.index_of(p->vertices[k]), q.index_of(p->vertices[k + 1]));
    }
  }
  const std::size_t j = q.index_of(a.source());
  const std::size_t i = q.index_of(a.target());
  for (std::size_t u : span)
    for (std::size_t v : span) {
      if (!q.has_arrow(u, v) || own.contains({u, v})) continue;
      if (u == i && v == j) continue;
      return false;
    }
  return true;
}

}  // namespace cqt
