#include <algorithm>
#include <random>

#include "cqt/canonical.hpp"
#include "cqt/error.hpp"
#include "cqt/named.hpp"
#include "cqt/quiver.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cqt;

namespace {

Quiver from(std::vector<std::string> vertices, std::vector<Arrow> arrows) {
  return Quiver::from_arrows(std::move(vertices), arrows);
}

Quiver a3_linear() { return from({"1", "2", "3"}, {{"1", "2", 1}, {"2", "3", 1}}); }

}  // namespace

TEST_CASE("construction validates the exchange matrix") {
  CHECK_THROWS_AS(Quiver({"a", "b"}, {0, 1, 1, 0}), InvalidQuiver);
  CHECK_THROWS_AS(Quiver({"a", "a"}, {0, 1, -1, 0}), InvalidQuiver);
  CHECK_THROWS_AS(Quiver({"a"}, {1}), InvalidQuiver);
  CHECK_THROWS_AS(Quiver({"a", "b"}, {0, 1, -1}), InvalidQuiver);
  CHECK_THROWS_AS(from({"a", "b"}, {{"a", "b", 1}, {"b", "a", 1}}), InvalidQuiver);
  CHECK_THROWS_AS(from({"a"}, {{"a", "a", 1}}), InvalidQuiver);
  CHECK_THROWS_AS(from({"a", "b"}, {{"a", "c", 1}}), UnknownVertex);
  CHECK_THROWS_AS(from({"a", "b"}, {{"a", "b", 0}}), InvalidQuiver);

  const Quiver q = from({"x", "y"}, {{"x", "y", 3}});
  CHECK(q.entry("x", "y") == 3);
  CHECK(q.entry("y", "x") == -3);
  CHECK(q.max_multiplicity() == 3);
  CHECK(q.arrow_count() == 3);
  CHECK_FALSE(q.multiplicity_free());
}

TEST_CASE("mutate: A3 linear at the middle vertex gives the oriented 3-cycle") {
  const Quiver m = mutate(a3_linear(), "2");
  const Quiver expected = from({"1", "2", "3"}, {{"1", "3", 1}, {"3", "2", 1}, {"2", "1", 1}});
  CHECK(m == expected);
  CHECK(are_isomorphic(m, cyclic_quiver(3)));
}

TEST_CASE("mutate: a sink reverses its arrows") {
  const Quiver q = from({"1", "2"}, {{"1", "2", 1}});
  CHECK(mutate(q, "2") == from({"1", "2"}, {{"2", "1", 1}}));
  CHECK_THROWS_AS(mutate(q, "nosuch"), UnknownVertex);
}

TEST_CASE("mutate is an involution on 500 seeded random quivers") {
  std::mt19937_64 rng(20261015);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t rank = 1 + rng() % 8;
    const Quiver q = random_quiver(rank, rng(), 0.6, 3);
    const std::size_t k = rng() % rank;
    CHECK(mutate(mutate(q, k), k) == q);
  }
}

TEST_CASE("matrix mutation matches the four-step arrow procedure on multiplicity-free input") {
  std::mt19937_64 rng(7);
  int compared = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t rank = 2 + rng() % 6;
    const Quiver q = random_quiver(rank, rng(), 0.5, 1);
    for (std::size_t k = 0; k < rank; ++k) {
      CHECK(mutate(q, k) == oracle::four_step_mutation(q, k));
      ++compared;
    }
  }
  CHECK(compared > 1000);
}

TEST_CASE("factor deletes rows and columns") {
  const std::string drop4[] = {"4"};
  CHECK(factor(cyclic_quiver(4), drop4) == from({"1", "2", "3"}, {{"1", "2", 1}, {"2", "3", 1}}));

  const std::string drop2[] = {"2"};
  CHECK(are_isomorphic(factor(g_quiver(2, 2), drop2), cyclic_quiver(3)));

  const Quiver q = g_quiver(3, 4);
  const auto everything = q.vertices();
  const Quiver empty = factor(q, everything);
  CHECK(empty.empty());
  CHECK(empty == Quiver());

  const std::string bad[] = {"zz"};
  CHECK_THROWS_AS(factor(q, bad), UnknownVertex);
}

TEST_CASE("factor commutes with mutation away from the dropped support") {
  // Exhaustive over random quivers of rank <= 5 and all admissible (k, S).
  std::mt19937_64 rng(99);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rank = 2 + rng() % 4;
    const Quiver q = random_quiver(rank, rng(), 0.6, 2);
    for (std::size_t k = 0; k < rank; ++k) {
      for (unsigned mask = 1; mask < (1u << rank); ++mask) {
        if (mask & (1u << k)) continue;
        std::vector<std::size_t> drop;
        bool interacts = false;
        for (std::size_t s = 0; s < rank; ++s) {
          if (!(mask & (1u << s))) continue;
          drop.push_back(s);
          // s lies on a length-2 path through k
          for (std::size_t t = 0; t < rank; ++t)
            if ((q.entry(s, k) > 0 && q.entry(k, t) > 0) || (q.entry(t, k) > 0 && q.entry(k, s) > 0))
              interacts = true;
        }
        if (interacts) continue;
        std::vector<std::string> labels;
        for (auto s : drop) labels.push_back(q.label(s));
        const Quiver lhs = factor(mutate(q, k), labels);
        const Quiver rhs = mutate(factor(q, labels), q.label(k));
        CHECK(lhs == rhs);
        ++checked;
      }
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("shorten_path replaces a length-2 path by an arrow") {
  const Quiver q = from({"1", "v", "2"}, {{"1", "v", 1}, {"v", "2", 1}});
  CHECK(shorten_path(q, "v") == from({"1", "2"}, {{"1", "2", 1}}));
  CHECK_THROWS_AS(shorten_path(q, "w"), UnknownVertex);
}

TEST_CASE("shorten_path at a sink of the alternating 4-cycle") {
  // No length-2 path passes through a sink, so this is plain deletion.
  const Quiver alt = alternating_cycle(4);
  const Quiver shortened = shorten_path(alt, "2");
  const Quiver expected = from({"1", "3", "4"}, {{"1", "4", 1}, {"3", "4", 1}});
  CHECK(shortened == expected);

  // A 4-cycle with one oriented length-2 step 1 -> 2 -> 3 shortens to the
  // non-oriented triangle 1 -> 3, 1 -> 4, 3 -> 4.
  const Quiver bent = from({"1", "2", "3", "4"}, {{"1", "2", 1}, {"2", "3", 1}, {"1", "4", 1}, {"3", "4", 1}});
  const Quiver step = shorten_path(bent, "2");
  CHECK(step == from({"1", "3", "4"}, {{"1", "3", 1}, {"1", "4", 1}, {"3", "4", 1}}));
  // Shortening its middle vertex 3 leaves the Kronecker quiver 1 => 4.
  const Quiver collapsed = shorten_path(step, "3");
  CHECK(collapsed == from({"1", "4"}, {{"1", "4", 2}}));
}

TEST_CASE("repeated shortening of the lower arm of G(2, n-2) reaches G(2,2)") {
  for (int b = 3; b <= 6; ++b) {
    Quiver q = g_quiver(2, b);
    for (int i = b; i >= 3; --i) q = shorten_path(q, std::to_string(i) + "'");
    CHECK(q.rank() == 4);
    CHECK(are_isomorphic(q, g_quiver(2, 2)));
  }
}

TEST_CASE("is_acyclic") {
  CHECK(is_acyclic(a3_linear()));
  CHECK_FALSE(is_acyclic(cyclic_quiver(3)));
  CHECK_FALSE(is_acyclic(g_quiver(2, 2)));
  CHECK(is_acyclic(t_quiver(3, 5)));
  CHECK(is_acyclic(Quiver()));
}

TEST_CASE("oriented cycle and line shapes") {
  CHECK(is_oriented_cycle(cyclic_quiver(5)));
  CHECK_FALSE(is_oriented_cycle(alternating_cycle(4)));
  CHECK_FALSE(is_oriented_cycle(a3_linear()));
  CHECK(is_linear_path(a3_linear()));
  CHECK(is_linear_path(from({"a"}, {})));
  CHECK_FALSE(is_linear_path(mutate(a3_linear(), "1")));
  CHECK_FALSE(is_linear_path(cyclic_quiver(3)));
}
