#pragma once

// Independent reference implementations used only by the tests. None of them
// call into the library algorithms they are compared against.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cqt/quiver.hpp"
#include "cqt/relations.hpp"

namespace oracle {

/// The four-step arrow procedure (new vertex, fix up length-2 paths through
/// k, reverse arrows at k, delete k) on arrow-count matrices. Input must be
/// multiplicity-free. The new vertex inherits k's label and position.
cqt::Quiver four_step_mutation(const cqt::Quiver& q, std::size_t k);

/// Exhaustive search over all vertex permutations.
bool isomorphic(const cqt::Quiver& a, const cqt::Quiver& b);

/// Mutation class size by BFS with pairwise exhaustive isomorphism tests.
std::size_t class_size(const cqt::Quiver& seed, std::size_t limit = 10'000);

/// dim of span{paths u ~> v of length < rank} modulo the span of all
/// products path * generator * path, with paths of length >= rank treated
/// as zero. Keyed by (source index, target index).
std::map<std::pair<std::size_t, std::size_t>, std::size_t> quotient_dimensions(
    const cqt::Quiver& q, const cqt::RelationSet& relations);

std::size_t quotient_dimension(const cqt::Quiver& q, const cqt::RelationSet& relations);

/// "A4", "D5", "E6", ... by matching the underlying graph against reference
/// edge lists for every simply-laced type of the same rank.
std::optional<std::string> dynkin_by_table(const cqt::Quiver& q);

/// Random relabeling and reordering of q's vertices.
cqt::Quiver shuffle_labels(const cqt::Quiver& q, std::uint64_t seed);

/// Every directed cycle as a closed vertex sequence v0 ... v0, each rotation
/// listed separately; simple cycles only.
std::vector<std::vector<std::size_t>> oriented_cycles(const cqt::Quiver& q);

/// Shortest return paths j ~> i for the arrow i -> j by enumerating every
/// vertex-simple path and counting arrows in the induced full subquiver.
std::vector<std::vector<std::size_t>> shortest_paths_brute(const cqt::Quiver& q, std::size_t i,
                                                           std::size_t j);

}  // namespace oracle
