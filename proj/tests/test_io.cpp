#include <fstream>
#include <random>

#include "cqt/error.hpp"
#include "cqt/json_io.hpp"
#include "cqt/named.hpp"
#include "doctest.h"

using namespace cqt;

TEST_CASE("quiver JSON round trip") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    const Quiver q = random_quiver(1 + rng() % 8, rng(), 0.4, 3);
    CHECK(quiver_from_json(quiver_to_json(q)) == q);
    CHECK(quiver_from_string(quiver_to_json(q).dump()) == q);
  }
}

TEST_CASE("quiver JSON shape") {
  const json j = quiver_to_json(kronecker_quiver());
  CHECK(j["vertices"] == json::array({"1", "2"}));
  REQUIRE(j["arrows"].size() == 1);
  CHECK(j["arrows"][0] == json{{"from", "1"}, {"to", "2"}, {"mult", 2}});
}

TEST_CASE("mult defaults to one") {
  const Quiver q = quiver_from_string(R"({"vertices":["a","b"],"arrows":[{"from":"a","to":"b"}]})");
  CHECK(q.entry(0, 1) == 1);
}

TEST_CASE("malformed documents are parse errors") {
  const char* bad[] = {
      "not json",
      "[]",
      R"({"arrows":[]})",
      R"({"vertices":[1,2],"arrows":[]})",
      R"({"vertices":["a"],"arrows":{}})",
      R"({"vertices":["a","b"],"arrows":[{"from":"a"}]})",
      R"({"vertices":["a","b"],"arrows":[{"from":"a","to":"b","mult":"2"}]})",
  };
  for (const char* text : bad) {
    CAPTURE(text);
    CHECK_THROWS_AS(quiver_from_string(text), ParseError);
  }
}

TEST_CASE("ill-formed quivers are rejected") {
  const char* bad[] = {
      R"({"vertices":["a","a"],"arrows":[]})",
      R"({"vertices":["a"],"arrows":[{"from":"a","to":"a"}]})",
      R"({"vertices":["a","b"],"arrows":[{"from":"a","to":"b"},{"from":"b","to":"a"}]})",
      R"({"vertices":["a","b"],"arrows":[{"from":"a","to":"b"},{"from":"a","to":"b"}]})",
      R"({"vertices":["a","b"],"arrows":[{"from":"a","to":"c"}]})",
      R"({"vertices":["a","b"],"arrows":[{"from":"a","to":"b","mult":0}]})",
  };
  for (const char* text : bad) {
    CAPTURE(text);
    CHECK_THROWS_AS(quiver_from_string(text), InvalidQuiver);
  }
}

TEST_CASE("missing files are parse errors") {
  CHECK_THROWS_AS(read_quiver_file("/nonexistent/q.json"), ParseError);
}

TEST_CASE("shipped data files load") {
  const Quiver g = read_quiver_file(std::string(CQT_DATA_DIR) + "/g22.json");
  CHECK(g == g_quiver(2, 2));
  CHECK(read_quiver_file(std::string(CQT_DATA_DIR) + "/c5.json") == cyclic_quiver(5));
}

TEST_CASE("DOT output repeats multiple arrows") {
  const std::string dot = quiver_to_dot(kronecker_quiver());
  CHECK(dot.rfind("digraph quiver {", 0) == 0);
  std::size_t edges = 0;
  for (std::size_t at = dot.find("->"); at != std::string::npos; at = dot.find("->", at + 2)) ++edges;
  CHECK(edges == 2);
  CHECK(quiver_to_dot(g_quiver(2, 2)).find("\"2'\"") != std::string::npos);
}

TEST_CASE("relation set JSON") {
  const json j = relation_set_to_json(synthesize_relations(g_quiver(2, 2)));
  CHECK(j["quiver"] == quiver_to_json(g_quiver(2, 2)));
  REQUIRE(j["relations"].size() == 5);
  std::size_t comm = 0;
  for (const auto& r : j["relations"]) {
    if (r["kind"] == "commutativity") {
      ++comm;
      CHECK(r["arrow"] == json{{"from", "s"}, {"to", "1"}});
      CHECK(r["paths"] == json::array({json::array({"1", "2", "s"}), json::array({"1", "2'", "s"})}));
    } else {
      CHECK(r["kind"] == "zero");
      CHECK(r["paths"].size() == 1);
    }
  }
  CHECK(comm == 1);
  CHECK(relation_set_to_text(synthesize_relations(cyclic_quiver(3))).find("2 -> 3 -> 1 = 0") !=
        std::string::npos);
}

TEST_CASE("algebra report JSON") {
  const RewriteSystem rs = build_rewrite_system(g_quiver(2, 2), synthesize_relations(g_quiver(2, 2)));
  const json j = algebra_report_to_json(rs);
  CHECK(j["dimension"] == 10);
  CHECK(j["hom"].size() == 16);
  std::size_t total = 0;
  for (const auto& h : j["hom"]) total += h["dim"].get<std::size_t>();
  CHECK(total == 10);
  std::size_t proj = 0;
  for (const auto& [v, n] : j["projective_lengths"].items()) proj += n.get<std::size_t>();
  CHECK(proj == 10);
  CHECK(j["rules"].size() == rs.rule_count());
}

TEST_CASE("verdict JSON") {
  const json fin = type_verdict_to_json(is_finite_cluster_type(g_quiver(2, 3)));
  CHECK(fin["kind"] == "finite");
  CHECK(fin["dynkin"] == json{{"family", "D"}, {"rank", 5}});
  const json inf = type_verdict_to_json(is_finite_cluster_type(kronecker_quiver()));
  CHECK(inf["kind"] == "infinite");
  CHECK(inf["witness"].contains("trace"));
  const json dpa = dpa_verdict_to_json(is_double_path_avoiding(alternating_cycle(4)));
  CHECK(dpa["dpa"] == false);
  CHECK(dpa["witness"]["quiver"]["arrows"].is_array());
}

TEST_CASE("error envelope") {
  const json e = error_envelope("unknown-vertex", "no vertex x", {{"vertex", "x"}});
  CHECK(e == json{{"code", "unknown-vertex"}, {"message", "no vertex x"}, {"detail", {{"vertex", "x"}}}});
}
