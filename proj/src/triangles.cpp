#include "glover/triangles.hpp"

#include <algorithm>

namespace glover {

const char* triangle_type_name(TriangleType t) {
  switch (t) {
    case TriangleType::InteriorTriangle: return "interior_triangle";
    case TriangleType::BackArcI: return "back_arc_i";
    case TriangleType::InteriorExterior: return "interior_exterior";
    case TriangleType::BackArcII: return "back_arc_ii";
    case TriangleType::BackArcIII: return "back_arc_iii";
    case TriangleType::ExteriorTriangle: return "exterior_triangle";
  }
  return "?";
}

std::vector<TransitiveTriangle> enumerate_transitive_triangles(const OrientedGraph& g) {
  std::vector<TransitiveTriangle> result;
  // For each arc (x,y), the closing sinks are exactly out(x) ∩ out(y).
  // Iterating x then y ascending yields (x,y,z)-sorted output directly.
  for (NodeId x = 0; x < g.node_count(); ++x) {
    for (NodeId y : g.out_neighbors(x)) {
      for (NodeId z : intersect_sorted(g.out_neighbors(x), g.out_neighbors(y))) {
        result.push_back({x, y, z});
      }
    }
  }
  return result;
}

std::optional<TriangleType> try_classify_triangle(const RootedLayering& l,
                                                  const TransitiveTriangle& t) {
  // Pattern over the three arc classes (x->y, x->z, y->z). BFS layering
  // permits exactly ten class tuples; six pattern groups are realizable as
  // named cases, the all-back tuple is not covered by any of them.
  ArcClass a = arc_class(l, t.x, t.y);
  ArcClass b = arc_class(l, t.x, t.z);
  ArcClass c = arc_class(l, t.y, t.z);
  auto count = [&](ArcClass cls) {
    return static_cast<int>(a == cls) + static_cast<int>(b == cls) +
           static_cast<int>(c == cls);
  };
  int laterals = count(ArcClass::Lateral);
  int forwards = count(ArcClass::Forward);
  int backs = count(ArcClass::Back);

  if (laterals == 3) return TriangleType::InteriorTriangle;
  if (a == ArcClass::Forward && b == ArcClass::Forward && c == ArcClass::Lateral) {
    return TriangleType::InteriorExterior;  // parent with two children
  }
  if (a == ArcClass::Lateral && b == ArcClass::Forward && c == ArcClass::Forward) {
    return TriangleType::ExteriorTriangle;  // two same-layer sources
  }
  if (forwards == 1 && laterals == 1 && backs == 1) return TriangleType::BackArcII;
  if (backs == 2 && laterals == 1) return TriangleType::BackArcI;
  if (backs == 2 && forwards == 1) return TriangleType::BackArcIII;
  return std::nullopt;  // three back arcs
}

TriangleType classify_triangle(const RootedLayering& l, const TransitiveTriangle& t) {
  for (NodeId v : {t.x, t.y, t.z}) {
    if (!l.reachable(v)) throw UnreachableNodeError(v);
  }
  std::optional<TriangleType> type = try_classify_triangle(l, t);
  if (!type) throw UnclassifiableTriangleError(t);
  return *type;
}

TriangleCensus triangle_census(const OrientedGraph& g, const RootedLayering& l) {
  TriangleCensus census;
  for (const TransitiveTriangle& t : enumerate_transitive_triangles(g)) {
    ++census.total;
    if (!l.reachable(t.x) || !l.reachable(t.y) || !l.reachable(t.z)) {
      ++census.unreachable;
      continue;
    }
    std::optional<TriangleType> type = try_classify_triangle(l, t);
    if (type) {
      ++census.counts[static_cast<std::size_t>(*type)];
    } else {
      ++census.unclassifiable;
      census.unclassifiable_examples.push_back(t);
    }
  }
  return census;
}

std::vector<SeymourDiamond> enumerate_seymour_diamonds(const OrientedGraph& g) {
  std::vector<SeymourDiamond> result;
  for (NodeId x = 0; x < g.node_count(); ++x) {
    const NeighborSet& mids = g.out_neighbors(x);
    for (std::size_t i = 0; i < mids.size(); ++i) {
      for (std::size_t j = i + 1; j < mids.size(); ++j) {
        for (NodeId z : intersect_sorted(g.out_neighbors(mids[i]),
                                         g.out_neighbors(mids[j]))) {
          // z == x is impossible: x->y1 plus y1->x would be a symmetric pair.
          result.push_back({x, mids[i], mids[j], z});
        }
      }
    }
  }
  return result;
}

}  // namespace glover
