#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cqt/dynkin.hpp"
#include "cqt/quiver.hpp"

namespace cqt {

inline constexpr std::size_t kDefaultBudget = 50'000;

/// One step of a replayable trace. Vertex labels refer to the seed quiver,
/// since mutation keeps labels.
struct TraceStep {
  enum class Kind { Mutate, Drop };
  Kind kind = Kind::Mutate;
  std::string vertex;

  static TraceStep mutate(std::string v) { return {Kind::Mutate, std::move(v)}; }
  static TraceStep drop(std::string v) { return {Kind::Drop, std::move(v)}; }

  /// "mutate k" or "drop v".
  std::string to_string() const;
  static TraceStep parse(const std::string& text);

  bool operator==(const TraceStep&) const = default;
};

using Trace = std::vector<TraceStep>;

Quiver replay(const Quiver& seed, std::span<const TraceStep> trace);
Trace mutation_trace(std::span<const std::string> vertices);

struct ExploreOptions {
  /// Maximum number of distinct quivers (up to isomorphism) admitted.
  std::size_t budget = kDefaultBudget;
  /// Worker threads used to expand each BFS level. Results do not depend on it.
  unsigned jobs = 1;
};

struct ClassMember {
  Quiver quiver;  // canonical form
  Trace trace;    // shortest mutation sequence from the seed
};

struct MutationClass {
  Quiver seed;
  bool complete = false;
  std::vector<ClassMember> members;  // BFS order; members[0] is the seed's class

  bool contains(const Quiver& q) const;
};

/// Breadth-first closure of the seed under mutation, up to isomorphism.
MutationClass enumerate_class(const Quiver& seed, const ExploreOptions& options = {});

struct Witness {
  Quiver quiver;  // as reached from the seed (seed labels)
  Trace trace;
};

struct TypeVerdict {
  enum class Kind { Finite, Infinite, BudgetExceeded };
  Kind kind = Kind::BudgetExceeded;
  std::optional<DynkinLabel> dynkin;  // Finite only
  std::optional<Witness> witness;     // Finite (the Dynkin member) and Infinite
  std::size_t explored = 0;
};

/// Decides finite cluster type by exploring the mutation class. Stops at the
/// first member that is decisive: a multiple arrow (infinite), or an acyclic
/// member whose underlying graph is Dynkin (finite) or not (infinite). A
/// complete class with no acyclic member is infinite.
TypeVerdict is_finite_cluster_type(const Quiver& q, const ExploreOptions& options = {});

struct DpaVerdict {
  enum class Kind { Avoiding, NotAvoiding, BudgetExceeded };
  Kind kind = Kind::BudgetExceeded;
  std::optional<Witness> witness;  // NotAvoiding only; witness.quiver has a multiple arrow
  std::size_t explored = 0;
};

/// Explores the closure of q under mutation and single-vertex deletion and
/// reports the first quiver with a multiple arrow.
DpaVerdict is_double_path_avoiding(const Quiver& q, const ExploreOptions& options = {});

/// A mutation sequence (in src's labels) taking src to a quiver isomorphic to
/// dst, shortest among those found by BFS; nullopt if not found within budget.
std::optional<Trace> find_mutation_sequence(const Quiver& src, const Quiver& dst,
                                            const ExploreOptions& options = {});

}  // namespace cqt
