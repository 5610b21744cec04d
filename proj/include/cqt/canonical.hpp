#pragma once

#include <string>
#include <vector>

#include "cqt/quiver.hpp"

namespace cqt {

/// Result of one canonical labelling search.
struct Canonical {
  std::vector<std::size_t> order;
  std::string key;
};

Canonical canonicalize(const Quiver& q);

/// Vertex ordering that puts `q` in canonical position: the result's vertex
/// i is q's vertex order[i]. Isomorphic quivers yield equal permuted matrices.
std::vector<std::size_t> canonical_order(const Quiver& q);

/// The canonical representative of q's isomorphism class, with vertices
/// relabeled "1".."n".
Quiver canonical_form(const Quiver& q);

/// `q` permuted by `order` and relabeled "1".."n".
Quiver apply_canonical_order(const Quiver& q, const std::vector<std::size_t>& order);

/// Compact hashable key of the isomorphism class (rank plus canonical matrix).
std::string canonical_key(const Quiver& q);

bool are_isomorphic(const Quiver& a, const Quiver& b);

}  // namespace cqt
