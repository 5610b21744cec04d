#include "oracles.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

namespace oracle {

using cqt::Quiver;

cqt::Quiver four_step_mutation(const Quiver& q, std::size_t k) {
  const std::size_t n = q.rank();
  // count[u][v] = number of arrows u -> v; index n is the new vertex k*.
  std::vector<std::vector<int>> count(n + 1, std::vector<int>(n + 1, 0));
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) count[u][v] = std::max(q.entry(u, v), 0);

  // Step 2, decided on the original quiver for every path i -> k -> j.
  const auto before = count;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == k || j == k || before[i][k] == 0 || before[k][j] == 0) continue;
      if (before[j][i] > 0)
        --count[j][i];
      else
        ++count[i][j];
    }
  // Step 3.
  const std::size_t star = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == k) continue;
    count[star][i] += count[i][k];
    count[i][star] += count[k][i];
  }
  // Step 4: drop k, put k* in its slot.
  std::vector<std::size_t> slot(n);
  std::iota(slot.begin(), slot.end(), 0);
  slot[k] = star;
  std::vector<int> matrix(n * n, 0);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (u != v) matrix[u * n + v] = count[slot[u]][slot[v]] - count[slot[v]][slot[u]];
  return Quiver(q.vertices(), std::move(matrix));
}

bool isomorphic(const Quiver& a, const Quiver& b) {
  const std::size_t n = a.rank();
  if (n != b.rank()) return false;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t u = 0; u < n && ok; ++u)
      for (std::size_t v = 0; v < n && ok; ++v) ok = a.entry(u, v) == b.entry(perm[u], perm[v]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

std::size_t class_size(const Quiver& seed, std::size_t limit) {
  std::vector<Quiver> found{seed};
  for (std::size_t next = 0; next < found.size() && found.size() < limit; ++next) {
    for (std::size_t k = 0; k < seed.rank(); ++k) {
      const Quiver m = cqt::mutate(found[next], k);
      if (std::none_of(found.begin(), found.end(), [&](const Quiver& f) { return isomorphic(f, m); }))
        found.push_back(m);
    }
  }
  return found.size();
}

namespace {

using Walk = std::vector<std::size_t>;

std::vector<Walk> all_paths(const Quiver& q, std::size_t max_length) {
  std::vector<Walk> out;
  std::vector<Walk> layer;
  for (std::size_t v = 0; v < q.rank(); ++v) layer.push_back({v});
  for (std::size_t len = 0; len <= max_length; ++len) {
    out.insert(out.end(), layer.begin(), layer.end());
    std::vector<Walk> next;
    for (const auto& w : layer)
      for (std::size_t v = 0; v < q.rank(); ++v)
        if (q.entry(w.back(), v) > 0) {
          Walk e = w;
          e.push_back(v);
          next.push_back(std::move(e));
        }
    layer = std::move(next);
  }
  return out;
}

Walk to_walk(const Quiver& q, const cqt::Path& p) {
  Walk w;
  for (const auto& label : p.vertices) w.push_back(q.index_of(label));
  return w;
}

Walk concat(const Walk& a, const Walk& b) {
  Walk out = a;
  out.insert(out.end(), b.begin() + 1, b.end());
  return out;
}

std::size_t rank_of(std::vector<std::vector<mpq_class>> rows, std::size_t cols) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      const mpq_class f = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::map<std::pair<std::size_t, std::size_t>, std::size_t> quotient_dimensions(
    const Quiver& q, const cqt::RelationSet& relations) {
  const std::size_t n = q.rank();
  const std::size_t window = n == 0 ? 0 : n - 1;
  const auto paths = all_paths(q, window);

  std::map<std::pair<std::size_t, std::size_t>, std::vector<Walk>> blocks;
  for (const auto& p : paths) blocks[{p.front(), p.back()}].push_back(p);

  // Generators as (coefficient, walk) lists.
  std::vector<std::vector<std::pair<int, Walk>>> generators;
  for (const auto& r : relations.relations) {
    std::vector<std::pair<int, Walk>> g{{1, to_walk(q, r.first)}};
    if (r.second) g.emplace_back(-1, to_walk(q, *r.second));
    generators.push_back(std::move(g));
  }

  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::vector<mpq_class>>> rows;
  for (const auto& g : generators) {
    const std::size_t s = g.front().second.front();
    const std::size_t t = g.front().second.back();
    for (const auto& left : paths) {
      if (left.back() != s) continue;
      for (const auto& right : paths) {
        if (right.front() != t) continue;
        const auto key = std::make_pair(left.front(), right.back());
        const auto& basis = blocks[key];
        std::vector<mpq_class> row(basis.size(), 0);
        bool any = false;
        for (const auto& [c, w] : g) {
          const Walk full = concat(concat(left, w), right);
          if (full.size() - 1 > window) continue;
          const auto it = std::find(basis.begin(), basis.end(), full);
          row[static_cast<std::size_t>(it - basis.begin())] += c;
          any = true;
        }
        if (any) rows[key].push_back(std::move(row));
      }
    }
  }

  std::map<std::pair<std::size_t, std::size_t>, std::size_t> dims;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      const auto key = std::make_pair(u, v);
      const std::size_t total = blocks[key].size();
      dims[key] = total - rank_of(rows[key], total);
    }
  return dims;
}

std::size_t quotient_dimension(const Quiver& q, const cqt::RelationSet& relations) {
  std::size_t total = 0;
  for (const auto& [key, dim] : quotient_dimensions(q, relations)) total += dim;
  return total;
}

namespace {

using Edges = std::set<std::pair<std::size_t, std::size_t>>;

Edges reference_edges(char family, std::size_t n) {
  Edges e;
  auto add = [&](std::size_t a, std::size_t b) { e.insert({std::min(a, b) - 1, std::max(a, b) - 1}); };
  if (family == 'A') {
    for (std::size_t i = 1; i < n; ++i) add(i, i + 1);
  } else if (family == 'D') {
    for (std::size_t i = 1; i + 1 < n; ++i) add(i, i + 1);
    add(n - 2, n);
  } else {
    for (std::size_t i = 1; i + 1 < n; ++i) add(i, i + 1);
    add(3, n);
  }
  return e;
}

}  // namespace

std::optional<std::string> dynkin_by_table(const Quiver& q) {
  const std::size_t n = q.rank();
  if (n == 0) return std::nullopt;
  Edges edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) {
      const int b = q.entry(u, v);
      if (b > 1 || b < -1) return std::nullopt;
      if (b != 0) edges.insert({u, v});
    }
  std::vector<std::pair<char, std::size_t>> candidates{{'A', n}};
  if (n >= 4) candidates.push_back({'D', n});
  if (n >= 6 && n <= 8) candidates.push_back({'E', n});
  for (const auto& [family, rank] : candidates) {
    const Edges ref = reference_edges(family, rank);
    if (ref.size() != edges.size()) continue;
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      bool ok = true;
      for (const auto& [a, b] : ref) {
        const auto x = std::min(perm[a], perm[b]), y = std::max(perm[a], perm[b]);
        if (!edges.contains({x, y})) {
          ok = false;
          break;
        }
      }
      if (ok) return std::string(1, family) + std::to_string(rank);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return std::nullopt;
}

Quiver shuffle_labels(const Quiver& q, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> order(q.rank());
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  const Quiver reordered = cqt::permute(q, order);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < q.rank(); ++i) labels.push_back("v" + std::to_string(rng() % 1000) + "_" + std::to_string(i));
  return cqt::relabel(reordered, std::move(labels));
}

std::vector<std::vector<std::size_t>> oriented_cycles(const Quiver& q) {
  std::vector<std::vector<std::size_t>> out;
  const std::size_t n = q.rank();
  std::vector<std::size_t> path;
  std::vector<bool> used(n, false);
  auto dfs = [&](auto&& self, std::size_t start, std::size_t u) -> void {
    for (std::size_t v = 0; v < n; ++v) {
      if (q.entry(u, v) <= 0) continue;
      if (v == start) {
        auto cycle = path;
        cycle.push_back(start);
        out.push_back(std::move(cycle));
      } else if (!used[v]) {
        used[v] = true;
        path.push_back(v);
        self(self, start, v);
        path.pop_back();
        used[v] = false;
      }
    }
  };
  for (std::size_t s = 0; s < n; ++s) {
    path = {s};
    used.assign(n, false);
    used[s] = true;
    dfs(dfs, s, s);
  }
  return out;
}

std::vector<std::vector<std::size_t>> shortest_paths_brute(const Quiver& q, std::size_t i,
                                                           std::size_t j) {
  std::vector<std::vector<std::size_t>> simple;
  std::vector<std::size_t> path{j};
  std::vector<bool> used(q.rank(), false);
  used[j] = true;
  auto dfs = [&](auto&& self, std::size_t u) -> void {
    if (u == i) {
      simple.push_back(path);
      return;
    }
    for (std::size_t v = 0; v < q.rank(); ++v)
      if (q.entry(u, v) > 0 && !used[v]) {
        used[v] = true;
        path.push_back(v);
        self(self, v);
        path.pop_back();
        used[v] = false;
      }
  };
  dfs(dfs, j);

  std::vector<std::vector<std::size_t>> out;
  for (const auto& p : simple) {
    int arrows = 0;
    for (std::size_t a : p)
      for (std::size_t b : p) arrows += std::max(q.entry(a, b), 0);
    if (arrows == static_cast<int>(p.size())) out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace oracle
