#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cqt {

/// A view of one positive entry of the exchange matrix.
struct Arrow {
  std::string source;
  std::string target;
  int multiplicity = 1;

  bool operator==(const Arrow&) const = default;
};

/// A finite quiver without loops or 2-cycles, stored as its skew-symmetric
/// exchange matrix B with B[u][v] = #(u -> v) - #(v -> u).
///
/// Values are immutable after construction; every constructor validates
/// skew-symmetry and label uniqueness.
class Quiver {
 public:
  Quiver() = default;

  /// `matrix` is row-major, rank() x rank().
  Quiver(std::vector<std::string> vertices, std::vector<int> matrix);

  static Quiver from_arrows(std::vector<std::string> vertices, std::span<const Arrow> arrows);

  std::size_t rank() const noexcept { return vertices_.size(); }
  bool empty() const noexcept { return vertices_.empty(); }

  const std::vector<std::string>& vertices() const noexcept { return vertices_; }
  const std::vector<int>& matrix() const noexcept { return matrix_; }
  const std::string& label(std::size_t index) const { return vertices_.at(index); }

  int entry(std::size_t u, std::size_t v) const noexcept { return matrix_[u * rank() + v]; }
  int entry(const std::string& u, const std::string& v) const;

  /// Number of arrows u -> v.
  int arrows_between(std::size_t u, std::size_t v) const noexcept {
    int b = entry(u, v);
    return b > 0 ? b : 0;
  }
  bool has_arrow(std::size_t u, std::size_t v) const noexcept { return entry(u, v) > 0; }

  std::optional<std::size_t> find(const std::string& label) const noexcept;
  /// Throws UnknownVertex.
  std::size_t index_of(const std::string& label) const;

  /// Arrows ordered by (source index, target index).
  std::vector<Arrow> arrows() const;
  std::size_t arrow_count() const noexcept;
  int max_multiplicity() const noexcept;
  bool multiplicity_free() const noexcept { return max_multiplicity() <= 1; }

  std::vector<std::size_t> successors(std::size_t u) const;
  std::vector<std::size_t> predecessors(std::size_t u) const;

  bool operator==(const Quiver&) const = default;

 private:
  std::vector<std::string> vertices_;
  std::vector<int> matrix_;
};

/// Matrix mutation at vertex `k`. The mutated vertex keeps its label.
Quiver mutate(const Quiver& q, std::size_t k);
Quiver mutate(const Quiver& q, const std::string& k);

/// Full subquiver on the vertices not listed in `drop`.
Quiver factor(const Quiver& q, std::span<const std::string> drop);
Quiver factor_indices(const Quiver& q, std::span<const std::size_t> drop);

/// Mutate at `v`, then delete `v`. A length-2 path through v becomes an arrow.
Quiver shorten_path(const Quiver& q, const std::string& v);

bool is_acyclic(const Quiver& q);

/// Renames vertices in place: vertex i gets `labels[i]`.
Quiver relabel(const Quiver& q, std::vector<std::string> labels);

/// Reorders vertices: the result's vertex i is q's vertex `order[i]`.
Quiver permute(const Quiver& q, std::span<const std::size_t> order);

/// True iff the quiver is a single oriented cycle through all of its (>= 3) vertices.
bool is_oriented_cycle(const Quiver& q);

/// True iff the quiver is a linearly oriented line v1 -> v2 -> ... -> vn (n >= 1).
bool is_linear_path(const Quiver& q);

}  // namespace cqt
