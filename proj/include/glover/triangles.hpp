#pragma once

#include <array>
#include <optional>
#include <vector>

#include "glover/digraph.hpp"
#include "glover/layering.hpp"

namespace glover {

// Arcs x->y, x->z, y->z on three distinct nodes; x is the source, y the
// midpoint, z the sink.
struct TransitiveTriangle {
  NodeId x = 0, y = 0, z = 0;
  friend auto operator<=>(const TransitiveTriangle&, const TransitiveTriangle&) = default;
};

enum class TriangleType {
  InteriorTriangle,   // all three nodes in one layer
  BackArcI,           // two back arcs plus a lateral closing arc
  InteriorExterior,   // one parent, two children, lateral closing arc
  BackArcII,          // one forward-or-lateral pair with a single back arc
  BackArcIII,         // two back arcs plus a forward arc across three layers
  ExteriorTriangle,   // two same-layer sources into the next layer
};
inline constexpr std::size_t kTriangleTypeCount = 6;

const char* triangle_type_name(TriangleType t);

class UnreachableNodeError : public GraphError {
 public:
  explicit UnreachableNodeError(NodeId v)
      : GraphError("node " + std::to_string(v) + " is unreachable from the root") {}
};

class UnclassifiableTriangleError : public GraphError {
 public:
  UnclassifiableTriangleError(const TransitiveTriangle& t)
      : GraphError("triangle (" + std::to_string(t.x) + "," + std::to_string(t.y) + "," +
                   std::to_string(t.z) + ") matches none of the six layer patterns"),
        triangle(t) {}
  TransitiveTriangle triangle;
};

// All transitive triangles, sorted by (x, y, z), each reported once.
std::vector<TransitiveTriangle> enumerate_transitive_triangles(const OrientedGraph& g);

// Classification by layer membership and arc classes. Throws
// UnreachableNodeError if any corner is unreachable and
// UnclassifiableTriangleError when no pattern matches (which the six-case
// analysis predicts never happens; any occurrence is a counterexample worth
// keeping).
TriangleType classify_triangle(const RootedLayering& l, const TransitiveTriangle& t);

// Non-throwing variant used by the census.
std::optional<TriangleType> try_classify_triangle(const RootedLayering& l,
                                                  const TransitiveTriangle& t);

struct TriangleCensus {
  std::array<std::size_t, kTriangleTypeCount> counts{};  // indexed by TriangleType
  std::size_t unclassifiable = 0;
  std::size_t unreachable = 0;  // triangles touching an unreachable node
  std::size_t total = 0;
  std::vector<TransitiveTriangle> unclassifiable_examples;  // preserved evidence
};

TriangleCensus triangle_census(const OrientedGraph& g, const RootedLayering& l);

// Arcs x->y1, x->y2, y1->z, y2->z with y1 < y2: two distinct 2-paths x..z.
struct SeymourDiamond {
  NodeId x = 0, y1 = 0, y2 = 0, z = 0;
  friend auto operator<=>(const SeymourDiamond&, const SeymourDiamond&) = default;
};

std::vector<SeymourDiamond> enumerate_seymour_diamonds(const OrientedGraph& g);

}  // namespace glover
