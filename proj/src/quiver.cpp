#include "cqt/quiver.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <unordered_set>

#include "cqt/error.hpp"

namespace cqt {

Quiver::Quiver(std::vector<std::string> vertices, std::vector<int> matrix)
    : vertices_(std::move(vertices)), matrix_(std::move(matrix)) {
  const std::size_t n = vertices_.size();
  if (matrix_.size() != n * n)
    throw InvalidQuiver("exchange matrix has " + std::to_string(matrix_.size()) +
                        " entries, expected " + std::to_string(n * n));
  std::unordered_set<std::string> seen;
  for (const auto& v : vertices_)
    if (!seen.insert(v).second) throw InvalidQuiver("duplicate vertex label '" + v + "'");
  for (std::size_t u = 0; u < n; ++u) {
    if (entry(u, u) != 0) throw InvalidQuiver("loop at vertex '" + vertices_[u] + "'");
    for (std::size_t v = u + 1; v < n; ++v)
      if (entry(u, v) != -entry(v, u))
        throw InvalidQuiver("exchange matrix is not skew-symmetric at (" + vertices_[u] + ", " +
                            vertices_[v] + ")");
  }
}

Quiver Quiver::from_arrows(std::vector<std::string> vertices, std::span<const Arrow> arrows) {
  const std::size_t n = vertices.size();
  std::vector<int> matrix(n * n, 0);
  auto locate = [&](const std::string& label) {
    auto it = std::find(vertices.begin(), vertices.end(), label);
    if (it == vertices.end()) throw UnknownVertex(label);
    return static_cast<std::size_t>(it - vertices.begin());
  };
  for (const auto& a : arrows) {
    if (a.multiplicity < 1)
      throw InvalidQuiver("arrow " + a.source + " -> " + a.target + " has multiplicity " +
                          std::to_string(a.multiplicity));
    const std::size_t s = locate(a.source);
    const std::size_t t = locate(a.target);
    if (s == t) throw InvalidQuiver("loop at vertex '" + a.source + "'");
    if (matrix[t * n + s] > 0)
      throw InvalidQuiver("antiparallel arrows between '" + a.source + "' and '" + a.target + "'");
    if (matrix[s * n + t] > 0)
      throw InvalidQuiver("arrow " + a.source + " -> " + a.target + " listed twice");
    matrix[s * n + t] = a.multiplicity;
    matrix[t * n + s] = -a.multiplicity;
  }
  return Quiver(std::move(vertices), std::move(matrix));
}

int Quiver::entry(const std::string& u, const std::string& v) const {
  return entry(index_of(u), index_of(v));
}

std::optional<std::size_t> Quiver::find(const std::string& label) const noexcept {
  auto it = std::find(vertices_.begin(), vertices_.end(), label);
  if (it == vertices_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::size_t Quiver::index_of(const std::string& label) const {
  if (auto i = find(label)) return *i;
  throw UnknownVertex(label);
}

std::vector<Arrow> Quiver::arrows() const {
  std::vector<Arrow> out;
  for (std::size_t u = 0; u < rank(); ++u)
    for (std::size_t v = 0; v < rank(); ++v)
      if (int m = entry(u, v); m > 0) out.push_back({vertices_[u], vertices_[v], m});
  return out;
}

std::size_t Quiver::arrow_count() const noexcept {
  std::size_t count = 0;
  for (int b : matrix_)
    if (b > 0) count += static_cast<std::size_t>(b);
  return count;
}

int Quiver::max_multiplicity() const noexcept {
  int best = 0;
  for (int b : matrix_) best = std::max(best, b);
  return best;
}

std::vector<std::size_t> Quiver::successors(std::size_t u) const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < rank(); ++v)
    if (entry(u, v) > 0) out.push_back(v);
  return out;
}

std::vector<std::size_t> Quiver::predecessors(std::size_t u) const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < rank(); ++v)
    if (entry(v, u) > 0) out.push_back(v);
  return out;
}

Quiver mutate(const Quiver& q, std::size_t k) {
  const std::size_t n = q.rank();
  if (k >= n) throw UnknownVertex("#" + std::to_string(k));
  std::vector<int> out(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const int b = q.entry(i, j);
      if (i == k || j == k) {
        out[i * n + j] = -b;
      } else {
        const std::int64_t bik = q.entry(i, k);
        const std::int64_t bkj = q.entry(k, j);
        const std::int64_t value = b + (std::abs(bik) * bkj + bik * std::abs(bkj)) / 2;
        if (value > std::numeric_limits<int>::max() || value < -std::numeric_limits<int>::max())
          throw InvalidQuiver("exchange matrix entry overflow while mutating at '" + q.label(k) +
                              "'");
        out[i * n + j] = static_cast<int>(value);
      }
    }
  }
  return Quiver(q.vertices(), std::move(out));
}

Quiver mutate(const Quiver& q, const std::string& k) { return mutate(q, q.index_of(k)); }

Quiver factor_indices(const Quiver& q, std::span<const std::size_t> drop) {
  std::vector<bool> dropped(q.rank(), false);
  for (std::size_t d : drop) {
    if (d >= q.rank()) throw UnknownVertex("#" + std::to_string(d));
    dropped[d] = true;
  }
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < q.rank(); ++i)
    if (!dropped[i]) keep.push_back(i);
  return permute(q, keep);
}

Quiver factor(const Quiver& q, std::span<const std::string> drop) {
  std::vector<std::size_t> indices;
  indices.reserve(drop.size());
  for (const auto& label : drop) indices.push_back(q.index_of(label));
  return factor_indices(q, indices);
}

Quiver shorten_path(const Quiver& q, const std::string& v) {
  const std::size_t k = q.index_of(v);
  const Quiver mutated = mutate(q, k);
  const std::size_t drop[] = {k};
  return factor_indices(mutated, drop);
}

bool is_acyclic(const Quiver& q) {
  const std::size_t n = q.rank();
  std::vector<int> indegree(n, 0);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (q.has_arrow(u, v)) ++indegree[v];
  std::vector<std::size_t> ready;
  for (std::size_t v = 0; v < n; ++v)
    if (indegree[v] == 0) ready.push_back(v);
  std::size_t removed = 0;
  while (!ready.empty()) {
    const std::size_t u = ready.back();
    ready.pop_back();
    ++removed;
    for (std::size_t v = 0; v < n; ++v)
      if (q.has_arrow(u, v) && --indegree[v] == 0) ready.push_back(v);
  }
  return removed == n;
}

Quiver relabel(const Quiver& q, std::vector<std::string> labels) {
  if (labels.size() != q.rank()) throw InvalidParameters("relabel: wrong number of labels");
  return Quiver(std::move(labels), q.matrix());
}

Quiver permute(const Quiver& q, std::span<const std::size_t> order) {
  const std::size_t m = order.size();
  std::vector<std::string> labels;
  labels.reserve(m);
  std::vector<int> matrix(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    labels.push_back(q.label(order[i]));
    for (std::size_t j = 0; j < m; ++j) matrix[i * m + j] = q.entry(order[i], order[j]);
  }
  return Quiver(std::move(labels), std::move(matrix));
}

namespace {

// The single out-neighbour of every vertex (rank() if none). Empty when some
// vertex has two out-arrows or an arrow is multiple.
std::vector<std::size_t> unique_successors(const Quiver& q) {
  std::vector<std::size_t> next(q.rank(), q.rank());
  for (std::size_t u = 0; u < q.rank(); ++u) {
    for (std::size_t v = 0; v < q.rank(); ++v) {
      const int b = q.entry(u, v);
      if (b > 1) return {};
      if (b == 1) {
        if (next[u] != q.rank()) return {};
        next[u] = v;
      }
    }
  }
  return next;
}

}  // namespace

bool is_oriented_cycle(const Quiver& q) {
  const std::size_t n = q.rank();
  if (n < 3 || q.arrow_count() != n) return false;
  const auto next = unique_successors(q);
  if (next.empty()) return false;
  std::size_t v = 0;
  for (std::size_t step = 0; step < n; ++step) {
    if (next[v] == n) return false;
    v = next[v];
    if (v == 0 && step + 1 < n) return false;
  }
  return v == 0;
}

bool is_linear_path(const Quiver& q) {
  const std::size_t n = q.rank();
  if (n == 0 || q.arrow_count() != n - 1) return false;
  const auto next = unique_successors(q);
  if (next.empty()) return false;
  std::vector<int> indegree(n, 0);
  for (std::size_t v : next)
    if (v < n) ++indegree[v];
  const auto start = std::find(indegree.begin(), indegree.end(), 0);
  if (start == indegree.end()) return false;
  std::size_t v = static_cast<std::size_t>(start - indegree.begin());
  std::size_t visited = 1;
  while (next[v] != n) {
    v = next[v];
    ++visited;
    if (visited > n) return false;
  }
  return visited == n;
}

}  // namespace cqt
