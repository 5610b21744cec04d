#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "cqt/quiver.hpp"

namespace cqt {

/// A path given by its vertex sequence v0, ..., vm (length m). Consecutive
/// vertices are joined by arrows of the host quiver.
struct Path {
  std::vector<std::string> vertices;

  std::size_t length() const noexcept { return vertices.empty() ? 0 : vertices.size() - 1; }
  const std::string& source() const { return vertices.front(); }
  const std::string& target() const { return vertices.back(); }
  /// "1 -> 2 -> s"
  std::string to_string() const;

  auto operator<=>(const Path&) const = default;
};

/// A generator of the ideal: a path set to zero, or `first - second` with the
/// second coefficient normalized to -1.
struct Relation {
  enum class Kind { Zero, Commutativity };
  Kind kind = Kind::Zero;
  std::string arrow_source;  // the arrow i -> j whose return paths these are
  std::string arrow_target;
  Path first;
  std::optional<Path> second;

  /// "rho = 0" or "rho - mu = 0" with paths as vertex chains.
  std::string to_string() const;
};

struct RelationSet {
  Quiver quiver;
  std::vector<Relation> relations;  // at most one per arrow, in arrow order
};

/// All shortest return paths j ~> i for the arrow i -> j: paths whose closing
/// cycle (path followed by i -> j) visits distinct vertices and spans a full
/// subquiver containing no arrow besides its own. Ordered lexicographically
/// by vertex position in q. Requires q multiplicity-free.
std::vector<Path> enumerate_shortest_paths(const Quiver& q, const std::string& from,
                                           const std::string& to);

/// One generator per arrow with a shortest return path: a zero relation for a
/// unique path, a commutativity relation for two (lexicographically smaller
/// path first). Throws ThreeOrMoreShortestPaths if an arrow has three or more.
RelationSet synthesize_relations(const Quiver& q);

/// Paths sharing endpoints and no other vertex.
bool paths_disjoint(const Path& a, const Path& b);

/// Disjoint paths from j to i whose generated full subquiver has no arrows
/// besides theirs and possibly one arrow i -> j.
bool paths_disconnected(const Quiver& q, const Path& a, const Path& b);

}  // namespace cqt
