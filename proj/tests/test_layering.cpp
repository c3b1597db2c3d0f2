#include "doctest.h"
#include "glover/generators.hpp"
#include "glover/layering.hpp"

using namespace glover;

TEST_CASE("cycle5 layers one node per level with a single back arc") {
  OrientedGraph g = fixture("cycle5");
  RootedLayering l(g, 0);
  REQUIRE(l.layer_count() == 5);
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(l.layer(i) == std::vector<NodeId>{static_cast<NodeId>(i)});
    CHECK(l.dist(static_cast<NodeId>(i)) == i);
  }
  REQUIRE(l.back_arcs().size() == 1);
  CHECK(l.back_arcs()[0] == BackArc{4, 0, 4});
  CHECK(l.unreachable().empty());
}

TEST_CASE("intra-layer order is out-degree descending then id ascending") {
  OrientedGraph g = fixture("nbr0ex");
  RootedLayering l(g, 0);
  REQUIRE(l.layer_count() == 3);
  CHECK(l.layer(0) == std::vector<NodeId>{0});
  // Out-degrees in R_1: d+(3)=4, d+(1)=3, d+(2)=3.
  CHECK(l.layer(1) == std::vector<NodeId>{3, 1, 2});
  CHECK(l.layer(2) == std::vector<NodeId>{4, 5, 6});
  CHECK(l.order_in_layer(3) == 0);
  CHECK(l.order_in_layer(2) == 2);
  CHECK(l.back_arcs().empty());
}

TEST_CASE("backtri records its back arc without aborting") {
  OrientedGraph g = fixture("backtri");
  RootedLayering l(g, 0);
  REQUIRE(l.layer_count() == 3);
  CHECK(l.layer(0) == std::vector<NodeId>{0});
  CHECK(l.layer(1) == std::vector<NodeId>{1, 2});
  CHECK(l.layer(2) == std::vector<NodeId>{3});
  REQUIRE(l.back_arcs().size() == 1);
  CHECK(l.back_arcs()[0] == BackArc{3, 2, 1});
  // Node 4 has no arcs at all in this fixture.
  CHECK(l.unreachable() == NeighborSet{4});
  CHECK_FALSE(l.reachable(4));
  CHECK(l.dist_opt(4) == std::nullopt);
}

TEST_CASE("arc classes") {
  OrientedGraph g = fixture("backtri");
  RootedLayering l(g, 0);
  CHECK(arc_class(l, 0, 1) == ArcClass::Forward);
  CHECK(arc_class(l, 1, 2) == ArcClass::Lateral);
  CHECK(arc_class(l, 3, 2) == ArcClass::Back);

  OrientedGraph h = build_graph(3, {{0, 1}, {2, 0}});
  RootedLayering lh(h, 0);
  CHECK(lh.unreachable() == NeighborSet{2});
  CHECK(arc_class(lh, 2, 0) == ArcClass::FromUnreachable);
}

TEST_CASE("representative parent follows intra-layer order") {
  OrientedGraph g = fixture("nbr0ex");
  RootedLayering l(g, 0);
  CHECK(l.representative_parent(0) == std::nullopt);
  CHECK(l.representative_parent(1) == 0);
  // In-neighbors of 4 in R_1 are {1,2,3}; 3 comes first in layer order.
  CHECK(l.representative_parent(4) == 3);
  CHECK(l.representative_parent(6) == 1);
}

TEST_CASE("min out-degree node with both tie-breaks") {
  CHECK(min_out_degree_node(fixture("nbr0ex")) == 4);
  CHECK(min_out_degree_node(fixture("nbr0ex"), TieBreak::HighestInDegree) == 4);
  CHECK(min_out_degree_node(fixture("furtherex")) == 6);
  CHECK(min_out_degree_node(fixture("irrint")) == 12);
  CHECK(min_out_degree_node(fixture("backtri")) == 2);
  CHECK_THROWS_AS(min_out_degree_node(OrientedGraph()), EmptyGraphError);
}

TEST_CASE("neighbor partition follows the case rule") {
  OrientedGraph further = fixture("furtherex");
  RootedLayering l(further, 0);
  NeighborPartition p = neighbor_partition(l, 0, 1);
  CHECK(p.interior == NeighborSet{2});
  CHECK(p.exterior == NeighborSet{4, 5});
  CHECK(p.back.empty());

  OrientedGraph nbr0 = fixture("nbr0ex");
  RootedLayering ln(nbr0, 0);
  NeighborPartition q = neighbor_partition(ln, 0, 1);
  CHECK(q.interior.empty());
  CHECK(q.exterior == NeighborSet{4, 5, 6});

  OrientedGraph back = fixture("backtri");
  RootedLayering lb(back, 0);
  NeighborPartition r = neighbor_partition(lb, 1, 3);
  CHECK(r.back == NeighborSet{2});
  CHECK(r.interior.empty());
  CHECK(r.exterior.empty());

  // (1,2) is an arc but lateral, not parent-child.
  CHECK_THROWS_AS(neighbor_partition(lb, 1, 2), NotParentChildError);
  CHECK_THROWS_AS(neighbor_partition(lb, 0, 3), NotParentChildError);
}

TEST_CASE("set-definitional interior and exterior") {
  OrientedGraph further = fixture("furtherex");
  CHECK(interior_set_definitional(further, 0, 1) == NeighborSet{2});
  CHECK(exterior_set_definitional(further, 0, 1) == NeighborSet{4, 5});
  OrientedGraph c5 = fixture("cycle5");
  CHECK(exterior_set_definitional(c5, 0, 1) == NeighborSet{2});
  CHECK_THROWS_AS(exterior_set_definitional(c5, 0, 2), NotAnArcError);
  CHECK_THROWS_AS(interior_set_definitional(c5, 0, 2), NotAnArcError);
}

TEST_CASE("layer size sequence with informational bound") {
  OrientedGraph further = fixture("furtherex");
  RootedLayering l(further, 0);
  LayerSizeReport report = layer_size_sequence(l);
  CHECK(report.sizes == std::vector<std::size_t>{1, 3, 2, 3});
  CHECK(report.delta == 3);
  // Bounds delta-(i-1) for layers 1..3: 3, 2, 1 -> last layer breaks it.
  REQUIRE(report.bound_ok.size() == 3);
  CHECK(report.bound_ok[0]);
  CHECK(report.bound_ok[1]);
  CHECK_FALSE(report.bound_ok[2]);
}

TEST_CASE("layer split at a boundary") {
  OrientedGraph c5 = fixture("cycle5");
  RootedLayering l(c5, 0);
  LayerSplit split = split_layers(l, 2);
  CHECK(split.group_a == NeighborSet{0, 1});
  CHECK(split.buffer == NeighborSet{2});
  CHECK(split.group_b == NeighborSet{3, 4});
  REQUIRE(split.crossing.size() == 1);
  CHECK(split.crossing[0] == Arc{4, 0});
  CHECK_THROWS_AS(split_layers(l, 5), BoundaryOutOfRangeError);
}
