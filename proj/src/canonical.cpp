#include "cqt/canonical.hpp"

#include <algorithm>
#include <cstdint>

namespace cqt {
namespace {

using Coloring = std::vector<int>;

// Iterated degree refinement. A vertex signature is its current colour plus
// the sorted multiset of (neighbour colour, exchange entry). New colours are
// ranks of signatures, so cell order never depends on vertex labels.
Coloring refine(const Quiver& q, Coloring colors) {
  const std::size_t n = q.rank();
  using Signature = std::pair<int, std::vector<std::pair<int, int>>>;
  std::size_t cells = 0;
  for (;;) {
    std::vector<Signature> sigs(n);
    for (std::size_t v = 0; v < n; ++v) {
      sigs[v].first = colors[v];
      for (std::size_t u = 0; u < n; ++u)
        if (int b = q.entry(v, u); b != 0) sigs[v].second.emplace_back(colors[u], b);
      std::sort(sigs[v].second.begin(), sigs[v].second.end());
    }
    std::vector<Signature> distinct = sigs;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (std::size_t v = 0; v < n; ++v)
      colors[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), sigs[v]) -
                                   distinct.begin());
    if (distinct.size() == cells) return colors;
    cells = distinct.size();
  }
}

// Swapping u and v fixes the matrix.
bool interchangeable(const Quiver& q, std::size_t u, std::size_t v) {
  if (q.entry(u, v) != 0) return false;
  for (std::size_t w = 0; w < q.rank(); ++w)
    if (w != u && w != v && q.entry(u, w) != q.entry(v, w)) return false;
  return true;
}

struct Search {
  const Quiver& q;
  std::vector<int> best_matrix;
  std::vector<std::size_t> best_order;

  void leaf(const Coloring& colors) {
    const std::size_t n = q.rank();
    std::vector<std::size_t> order(n);
    for (std::size_t v = 0; v < n; ++v) order[static_cast<std::size_t>(colors[v])] = v;
    std::vector<int> matrix(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) matrix[i * n + j] = q.entry(order[i], order[j]);
    if (best_order.empty() || matrix < best_matrix) {
      best_matrix = std::move(matrix);
      best_order = std::move(order);
    }
  }

  void run(Coloring colors) {
    colors = refine(q, std::move(colors));
    const std::size_t n = q.rank();
    std::vector<int> cell_size(n, 0);
    for (int c : colors) ++cell_size[static_cast<std::size_t>(c)];
    int target = -1;
    for (std::size_t c = 0; c < n; ++c)
      if (cell_size[c] > 1) {
        target = static_cast<int>(c);
        break;
      }
    if (target < 0) {
      leaf(colors);
      return;
    }
    std::vector<std::size_t> tried;
    for (std::size_t v = 0; v < n; ++v) {
      if (colors[v] != target) continue;
      if (std::any_of(tried.begin(), tried.end(),
                      [&](std::size_t t) { return interchangeable(q, t, v); }))
        continue;
      tried.push_back(v);
      Coloring next(n);
      for (std::size_t u = 0; u < n; ++u) next[u] = 2 * colors[u] + (u == v ? 0 : 1);
      run(std::move(next));
    }
  }
};

}  // namespace

namespace {

std::string key_for(const Quiver& q, const std::vector<std::size_t>& order) {
  const std::size_t n = q.rank();
  std::string key;
  key.reserve(4 * (n * n / 2 + 1));
  auto put = [&key](std::int32_t value) {
    const auto bits = static_cast<std::uint32_t>(value);
    for (int shift = 0; shift < 32; shift += 8) key.push_back(static_cast<char>(bits >> shift));
  };
  put(static_cast<std::int32_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) put(q.entry(order[i], order[j]));
  return key;
}

}  // namespace

std::vector<std::size_t> canonical_order(const Quiver& q) {
  if (q.empty()) return {};
  Search search{q, {}, {}};
  search.run(Coloring(q.rank(), 0));
  return search.best_order;
}

Canonical canonicalize(const Quiver& q) {
  Canonical result;
  result.order = canonical_order(q);
  result.key = key_for(q, result.order);
  return result;
}

Quiver apply_canonical_order(const Quiver& q, const std::vector<std::size_t>& order) {
  std::vector<std::string> labels;
  labels.reserve(q.rank());
  for (std::size_t i = 0; i < q.rank(); ++i) labels.push_back(std::to_string(i + 1));
  return relabel(permute(q, order), std::move(labels));
}

Quiver canonical_form(const Quiver& q) { return apply_canonical_order(q, canonical_order(q)); }

std::string canonical_key(const Quiver& q) { return key_for(q, canonical_order(q)); }

bool are_isomorphic(const Quiver& a, const Quiver& b) {
  return a.rank() == b.rank() && canonical_key(a) == canonical_key(b);
}

}  // namespace cqt
