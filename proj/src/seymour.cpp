#include "glover/seymour.hpp"

#include <algorithm>

namespace glover {

SeymourReport seymour_oracle(const OrientedGraph& g) {
  SeymourReport report;
  report.records.reserve(g.node_count());

  // Reusable epoch-stamped masks keep the scan at O(sum of deg^2) without
  // per-node allocation.
  std::vector<NodeId> stamp_first(g.node_count(), 0), stamp_second(g.node_count(), 0);
  NodeId epoch = 0;

  for (NodeId v = 0; v < g.node_count(); ++v) {
    ++epoch;
    stamp_first[v] = epoch;
    for (NodeId w : g.out_neighbors(v)) stamp_first[w] = epoch;

    std::size_t second = 0;
    for (NodeId w : g.out_neighbors(v)) {
      for (NodeId z : g.out_neighbors(w)) {
        if (stamp_first[z] != epoch && stamp_second[z] != epoch) {
          stamp_second[z] = epoch;
          ++second;
        }
      }
    }

    SeymourRecord rec{v, g.out_degree(v), second, second >= g.out_degree(v)};
    if (rec.is_seymour) report.seymour_set.push_back(v);
    report.records.push_back(rec);
  }
  return report;
}

DnspStatus dnsp_holds(const OrientedGraph& g, NodeId v) {
  g.check_id(v);
  return {v, second_out_neighbors(g, v).size() < g.out_degree(v)};
}

CoverCheck interior_cover_holds(const OrientedGraph& g, NodeId u) {
  g.check_id(u);
  const NeighborSet& firsts = g.out_neighbors(u);
  for (NodeId x : firsts) {
    bool covered = false;
    for (NodeId v : firsts) {
      if (v != x && g.has_arc(v, x)) {
        covered = true;
        break;
      }
    }
    if (!covered) return {false, x};
  }
  return {true, std::nullopt};
}

CoverCheck exterior_cover_holds(const OrientedGraph& g, NodeId u) {
  g.check_id(u);
  for (NodeId x : second_out_neighbors(g, u)) {
    bool covered = false;
    for (NodeId v : g.out_neighbors(u)) {
      if (g.has_arc(v, x)) {
        covered = true;
        break;
      }
    }
    if (!covered) return {false, x};
  }
  return {true, std::nullopt};
}

bool square_equivalence_check(const OrientedGraph& g) {
  Digraph squared = square_graph(g);
  NeighborSet doubling;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (squared.out_degree(v) >= 2 * g.out_degree(v)) doubling.push_back(v);
  }
  return doubling == seymour_oracle(g).seymour_set;
}

}  // namespace glover
