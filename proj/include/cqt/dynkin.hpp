#pragma once

#include <optional>
#include <string>

#include "cqt/quiver.hpp"

namespace cqt {

enum class DynkinFamily { A, D, E };

/// A simply-laced Dynkin type. Construct through `make()`, which enforces the
/// rank bounds and folds D_3 into A_3.
class DynkinLabel {
 public:
  static DynkinLabel make(DynkinFamily family, int rank);
  /// Parses "A4", "D5", "E7" (case-insensitive family letter).
  static DynkinLabel parse(const std::string& text);

  DynkinFamily family() const noexcept { return family_; }
  int rank() const noexcept { return rank_; }
  char family_letter() const noexcept;
  std::string to_string() const;

  bool operator==(const DynkinLabel&) const = default;

 private:
  DynkinLabel(DynkinFamily family, int rank) : family_(family), rank_(rank) {}

  DynkinFamily family_;
  int rank_;
};

/// The Dynkin type of q's underlying graph, if q is multiplicity-free and that
/// graph is a simply-laced Dynkin diagram. Orientation is ignored.
std::optional<DynkinLabel> underlying_graph_is_dynkin(const Quiver& q);

/// Number of indecomposable modules of a path algebra of the given type:
/// n(n+1)/2 for A_n, n(n-1) for D_n, and 36, 63, 120 for E_6, E_7, E_8.
long expected_indecomposable_count(const DynkinLabel& label);

}  // namespace cqt
