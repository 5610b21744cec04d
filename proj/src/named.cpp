#include "cqt/named.hpp"

#include <charconv>
#include <random>
#include <vector>

#include "cqt/error.hpp"

namespace cqt {
namespace {

std::vector<std::string> numbered(int n) {
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return labels;
}

std::string primed(int i) { return std::to_string(i) + "'"; }

std::vector<std::string> g_vertices(int a, int b) {
  std::vector<std::string> labels = numbered(a);
  for (int i = 2; i <= b; ++i) labels.push_back(primed(i));
  labels.push_back("s");
  return labels;
}

// Arrows of the two arms 1 -> ... -> a and 1 -> 2' -> ... -> b'.
std::vector<Arrow> arm_arrows(int a, int b) {
  std::vector<Arrow> arrows;
  for (int i = 1; i < a; ++i) arrows.push_back({std::to_string(i), std::to_string(i + 1), 1});
  arrows.push_back({"1", primed(2), 1});
  for (int i = 2; i < b; ++i) arrows.push_back({primed(i), primed(i + 1), 1});
  return arrows;
}

void require_ab(int a, int b) {
  if (a < 2 || b < 2) throw InvalidParameters("G(a,b) and T(a,b) need a, b >= 2");
}

int to_int(const std::string& text) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw InvalidParameters("expected an integer, got '" + text + "'");
  return value;
}

}  // namespace

Quiver cyclic_quiver(int n) {
  if (n < 3) throw InvalidParameters("C(n) needs n >= 3");
  std::vector<Arrow> arrows;
  for (int i = 1; i <= n; ++i) arrows.push_back({std::to_string(i), std::to_string(i % n + 1), 1});
  return Quiver::from_arrows(numbered(n), arrows);
}

Quiver g_quiver(int a, int b) {
  require_ab(a, b);
  auto arrows = arm_arrows(a, b);
  arrows.push_back({std::to_string(a), "s", 1});
  arrows.push_back({primed(b), "s", 1});
  arrows.push_back({"s", "1", 1});
  return Quiver::from_arrows(g_vertices(a, b), arrows);
}

Quiver t_quiver(int a, int b) {
  require_ab(a, b);
  auto arrows = arm_arrows(a, b);
  arrows.push_back({"s", "1", 1});
  return Quiver::from_arrows(g_vertices(a, b), arrows);
}

Quiver dynkin_quiver(const DynkinLabel& label) {
  const int n = label.rank();
  std::vector<Arrow> arrows;
  auto chain = [&](int last) {
    for (int i = 1; i < last; ++i) arrows.push_back({std::to_string(i), std::to_string(i + 1), 1});
  };
  switch (label.family()) {
    case DynkinFamily::A:
      chain(n);
      break;
    case DynkinFamily::D:
      chain(n - 1);
      arrows.push_back({std::to_string(n - 2), std::to_string(n), 1});
      break;
    case DynkinFamily::E:
      chain(n - 1);
      arrows.push_back({"3", std::to_string(n), 1});
      break;
  }
  return Quiver::from_arrows(numbered(n), arrows);
}

Quiver kronecker_quiver() {
  const Arrow arrows[] = {{"1", "2", 2}};
  return Quiver::from_arrows(numbered(2), arrows);
}

Quiver alternating_cycle(int n) {
  if (n < 4 || n % 2 != 0) throw InvalidParameters("alternating cycle needs even n >= 4");
  std::vector<Arrow> arrows;
  for (int i = 1; i <= n; i += 2) {
    arrows.push_back({std::to_string(i), std::to_string(i + 1), 1});
    arrows.push_back({std::to_string(i), std::to_string(i == 1 ? n : i - 1), 1});
  }
  return Quiver::from_arrows(numbered(n), arrows);
}

Quiver random_quiver(std::size_t rank, std::uint64_t seed, double density, int max_multiplicity) {
  if (density < 0.0 || density > 1.0) throw InvalidParameters("density must lie in [0, 1]");
  if (max_multiplicity < 1) throw InvalidParameters("max multiplicity must be >= 1");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution present(density), forward(0.5);
  std::uniform_int_distribution<int> multiplicity(1, max_multiplicity);
  std::vector<int> matrix(rank * rank, 0);
  for (std::size_t u = 0; u < rank; ++u)
    for (std::size_t v = u + 1; v < rank; ++v) {
      if (!present(rng)) continue;
      const int m = multiplicity(rng);
      const int b = forward(rng) ? m : -m;
      matrix[u * rank + v] = b;
      matrix[v * rank + u] = -b;
    }
  return Quiver(numbered(static_cast<int>(rank)), std::move(matrix));
}

Quiver make_named_quiver(const std::string& family, std::span<const std::string> args) {
  auto expect = [&](std::size_t count) {
    if (args.size() != count)
      throw InvalidParameters("'" + family + "' takes " + std::to_string(count) + " parameter(s)");
  };
  if (family == "C" || family == "cycle") {
    expect(1);
    return cyclic_quiver(to_int(args[0]));
  }
  if (family == "G") {
    expect(2);
    return g_quiver(to_int(args[0]), to_int(args[1]));
  }
  if (family == "T") {
    expect(2);
    return t_quiver(to_int(args[0]), to_int(args[1]));
  }
  if (family == "dynkin") {
    expect(1);
    return dynkin_quiver(DynkinLabel::parse(args[0]));
  }
  if (family == "kronecker") {
    expect(0);
    return kronecker_quiver();
  }
  if (family == "alternating-cycle") {
    expect(1);
    return alternating_cycle(to_int(args[0]));
  }
  throw InvalidParameters("unknown quiver family '" + family + "'");
}

}  // namespace cqt
