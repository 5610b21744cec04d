#include "cqt/dynkin.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

#include "cqt/error.hpp"

namespace cqt {

DynkinLabel DynkinLabel::make(DynkinFamily family, int rank) {
  switch (family) {
    case DynkinFamily::A:
      if (rank < 1) throw InvalidParameters("A_n needs n >= 1");
      break;
    case DynkinFamily::D:
      if (rank == 3) return DynkinLabel(DynkinFamily::A, 3);
      if (rank < 3) throw InvalidParameters("D_n needs n >= 4");
      break;
    case DynkinFamily::E:
      if (rank < 6 || rank > 8) throw InvalidParameters("E_n needs n in {6,7,8}");
      break;
  }
  return DynkinLabel(family, rank);
}

DynkinLabel DynkinLabel::parse(const std::string& text) {
  if (text.size() < 2) throw InvalidParameters("bad Dynkin label '" + text + "'");
  DynkinFamily family;
  switch (std::toupper(static_cast<unsigned char>(text[0]))) {
    case 'A': family = DynkinFamily::A; break;
    case 'D': family = DynkinFamily::D; break;
    case 'E': family = DynkinFamily::E; break;
    default: throw InvalidParameters("bad Dynkin family in '" + text + "'");
  }
  std::size_t pos = text[1] == '_' ? 2 : 1;
  const std::string digits = text.substr(pos);
  if (digits.empty() || digits.size() > 4 ||
      !std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw InvalidParameters("bad Dynkin rank in '" + text + "'");
  return make(family, std::stoi(digits));
}

char DynkinLabel::family_letter() const noexcept {
  switch (family_) {
    case DynkinFamily::A: return 'A';
    case DynkinFamily::D: return 'D';
    case DynkinFamily::E: return 'E';
  }
  return '?';
}

std::string DynkinLabel::to_string() const { return family_letter() + std::to_string(rank_); }

std::optional<DynkinLabel> underlying_graph_is_dynkin(const Quiver& q) {
  const std::size_t n = q.rank();
  if (n == 0 || !q.multiplicity_free()) return std::nullopt;

  std::vector<std::vector<std::size_t>> adjacent(n);
  std::size_t edges = 0;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (q.entry(u, v) != 0) {
        adjacent[u].push_back(v);
        if (u < v) ++edges;
      }
  if (edges != n - 1) return std::nullopt;

  // Connected with n-1 edges means tree.
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    stack.pop_back();
    for (std::size_t v : adjacent[u])
      if (!seen[v]) {
        seen[v] = true;
        ++reached;
        stack.push_back(v);
      }
  }
  if (reached != n) return std::nullopt;

  std::vector<std::size_t> branch_points;
  for (std::size_t v = 0; v < n; ++v) {
    if (adjacent[v].size() > 3) return std::nullopt;
    if (adjacent[v].size() == 3) branch_points.push_back(v);
  }
  if (branch_points.empty()) return DynkinLabel::make(DynkinFamily::A, static_cast<int>(n));
  if (branch_points.size() > 1) return std::nullopt;

  // Arm lengths from the unique trivalent vertex; arms are paths.
  const std::size_t centre = branch_points.front();
  std::vector<int> arms;
  for (std::size_t start : adjacent[centre]) {
    int length = 1;
    std::size_t prev = centre, cur = start;
    while (adjacent[cur].size() == 2) {
      const std::size_t next = adjacent[cur][0] == prev ? adjacent[cur][1] : adjacent[cur][0];
      prev = cur;
      cur = next;
      ++length;
    }
    arms.push_back(length);
  }
  std::sort(arms.begin(), arms.end());
  const int rank = static_cast<int>(n);
  if (arms[0] == 1 && arms[1] == 1) return DynkinLabel::make(DynkinFamily::D, rank);
  if (arms[0] == 1 && arms[1] == 2 && arms[2] <= 4) return DynkinLabel::make(DynkinFamily::E, rank);
  return std::nullopt;
}

long expected_indecomposable_count(const DynkinLabel& label) {
  const long n = label.rank();
  switch (label.family()) {
    case DynkinFamily::A: return n * (n + 1) / 2;
    case DynkinFamily::D: return n * (n - 1);
    case DynkinFamily::E:
      switch (n) {
        case 6: return 36;
        case 7: return 63;
        case 8: return 120;
      }
  }
  throw InvalidParameters("invalid Dynkin label " + label.to_string());
}

}  // namespace cqt
