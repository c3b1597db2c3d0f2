#include "doctest.h"
#include "glover/generators.hpp"
#include "glover/json_io.hpp"

using namespace glover;

TEST_CASE("round trip is the identity on fixtures") {
  for (const char* name : kFixtureNames) {
    CAPTURE(name);
    OrientedGraph g = fixture(name);
    std::string text = to_json(g);
    ParsedGraph parsed = from_json(text);
    CHECK(parsed.graph == g);
    CHECK(to_json(parsed.graph) == text);
    CHECK(parsed.declared_labels.empty());
  }
}

TEST_CASE("round trip on generated graphs") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    OrientedGraph g = gen_random_oriented(5 + seed % 30, 0.3, seed);
    CHECK(from_json(to_json(g)).graph == g);
  }
}

TEST_CASE("canonical text form") {
  OrientedGraph g = build_graph(3, {{0, 2}, {2, 1}});
  std::string text = to_json(g);
  CHECK(text.back() == '\n');
  // Keys in numeric order; every node present, even arc-free ones.
  CHECK(text.find("\"0\"") != std::string::npos);
  CHECK(text.find("\"1\"") != std::string::npos);
  CHECK(text.find("\"0\"") < text.find("\"1\""));
  CHECK(text.find("\"1\"") < text.find("\"2\""));
}

TEST_CASE("layer labels in the document") {
  OrientedGraph g = fixture("cycle5");
  RootedLayering l(g, 0);
  std::string text = to_json(g, &l);
  CHECK(text.find("\"neighborhood\": \"R_0\"") != std::string::npos);
  CHECK(text.find("\"neighborhood\": \"R_4\"") != std::string::npos);
  ParsedGraph parsed = from_json(text);
  CHECK(parsed.declared_labels.size() == 5);
  CHECK(parsed.declared_labels.at(3) == "R_3");
  CHECK(audit_labels(parsed, l).empty());
}

TEST_CASE("node count inference and missing keys") {
  ParsedGraph parsed = from_json(R"({"0": {"targets": [2]}})");
  CHECK(parsed.graph.node_count() == 3);
  CHECK(parsed.graph.out_degree(1) == 0);
  CHECK(parsed.graph.out_degree(2) == 0);
  CHECK(from_json("{}").graph.node_count() == 0);
}

TEST_CASE("parse and validation errors") {
  CHECK_THROWS_AS(from_json("not json"), ParseError);
  CHECK_THROWS_AS(from_json("[1,2]"), ParseError);
  CHECK_THROWS_AS(from_json(R"({"x": {"targets": []}})"), ParseError);
  CHECK_THROWS_AS(from_json(R"({"0": {"targets": ["a"]}})"), DanglingTargetError);
  CHECK_THROWS_AS(from_json(R"({"0": {"targets": [-1]}})"), DanglingTargetError);
  CHECK_THROWS_AS(from_json(R"({"0": {"targets": [0]}})"), ValidationError);
  CHECK_THROWS_AS(from_json(R"({"0": {"targets": [1]}, "1": {"targets": [0]}})"),
                  ValidationError);
}

TEST_CASE("label audit reports discrepancies") {
  OrientedGraph g = fixture("cycle5");
  RootedLayering l(g, 0);
  std::string text = R"({
    "0": {"targets": [1], "neighborhood": "R_0"},
    "1": {"targets": [2], "neighborhood": "R_2"},
    "2": {"targets": [3]},
    "3": {"targets": [4]},
    "4": {"targets": [0]}
  })";
  ParsedGraph parsed = from_json(text);
  std::vector<LabelDiff> diffs = audit_labels(parsed, l);
  REQUIRE(diffs.size() == 1);
  CHECK(diffs[0].node == 1);
  CHECK(diffs[0].declared == "R_2");
  CHECK(diffs[0].recomputed == "R_1");
}

TEST_CASE("dot rendering") {
  OrientedGraph g = fixture("backtri");
  RootedLayering l(g, 0);
  std::string dot = to_dot(g, &l);
  CHECK(validate_dot(dot));
  CHECK(dot.find("digraph") == 0);
  CHECK(dot.find("cluster_0") != std::string::npos);
  CHECK(dot.find("3 -> 2 [style=dashed]") != std::string::npos);

  CHECK(validate_dot(to_dot(g)));
  CHECK_FALSE(validate_dot("graph { }"));
  CHECK_FALSE(validate_dot("digraph { "));
  CHECK_FALSE(validate_dot("digraph { a -> b; }"));
}
