#include "glover/digraph.hpp"

#include <algorithm>

namespace glover {

void Digraph::assign(std::size_t node_count, const std::vector<Arc>& arcs,
                     bool validate_oriented) {
  out_.assign(node_count, {});
  in_.assign(node_count, {});

  std::vector<Arc> sorted = arcs;
  std::sort(sorted.begin(), sorted.end());

  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const Arc& a = sorted[i];
    if (a.tail >= node_count || a.head >= node_count) {
      throw IdOutOfRangeError("arc (" + std::to_string(a.tail) + "," +
                              std::to_string(a.head) + ") references node outside [0, " +
                              std::to_string(node_count) + ")");
    }
    if (a.tail == a.head) throw SelfLoopError(a.tail);
    if (validate_oriented) {
      if (i > 0 && sorted[i - 1] == a) throw DuplicateArcError(a.tail, a.head);
      if (std::binary_search(sorted.begin(), sorted.end(), Arc{a.head, a.tail})) {
        throw SymmetricPairError(std::min(a.tail, a.head), std::max(a.tail, a.head));
      }
    }
  }

  for (const Arc& a : sorted) {
    // Skip duplicates silently for plain digraphs; oriented graphs threw above.
    if (!out_[a.tail].empty() && out_[a.tail].back() == a.head) continue;
    out_[a.tail].push_back(a.head);
  }
  for (NodeId v = 0; v < node_count; ++v) {
    for (NodeId w : out_[v]) in_[w].push_back(v);
    arc_count_ += out_[v].size();
  }
  // in-rows were filled in increasing tail order, so they are already sorted.
}

Digraph::Digraph(std::size_t node_count, const std::vector<Arc>& arcs) {
  assign(node_count, arcs, /*validate_oriented=*/false);
}

OrientedGraph::OrientedGraph(std::size_t node_count, const std::vector<Arc>& arcs) {
  assign(node_count, arcs, /*validate_oriented=*/true);
}

bool Digraph::has_arc(NodeId u, NodeId v) const {
  check_id(u);
  check_id(v);
  const NeighborSet& row = out_[u];
  return std::binary_search(row.begin(), row.end(), v);
}

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> result;
  result.reserve(arc_count_);
  for (NodeId v = 0; v < out_.size(); ++v) {
    for (NodeId w : out_[v]) result.push_back({v, w});
  }
  return result;
}

OrientedGraph build_graph(std::size_t node_count, const std::vector<Arc>& arc_list) {
  return OrientedGraph(node_count, arc_list);
}

NeighborSet out_neighbors(const Digraph& g, NodeId v) { return g.out_neighbors(v); }

NeighborSet second_out_neighbors(const Digraph& g, NodeId v) {
  g.check_id(v);
  // Two-level expansion with a membership mask: a node is at distance exactly 2
  // iff it is a target of some first neighbor and is neither v nor in N+(v).
  std::vector<char> excluded(g.node_count(), 0);
  excluded[v] = 1;
  for (NodeId w : g.out_neighbors(v)) excluded[w] = 1;

  NeighborSet result;
  std::vector<char> seen(g.node_count(), 0);
  for (NodeId w : g.out_neighbors(v)) {
    for (NodeId z : g.out_neighbors(w)) {
      if (!excluded[z] && !seen[z]) {
        seen[z] = 1;
        result.push_back(z);
      }
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

InducedSubgraph induced_subgraph(const OrientedGraph& g, const NeighborSet& s) {
  std::vector<NodeId> remap(g.node_count(), static_cast<NodeId>(-1));
  InducedSubgraph result;
  result.original_ids = s;
  std::sort(result.original_ids.begin(), result.original_ids.end());
  result.original_ids.erase(
      std::unique(result.original_ids.begin(), result.original_ids.end()),
      result.original_ids.end());
  for (NodeId old : result.original_ids) g.check_id(old);
  for (std::size_t i = 0; i < result.original_ids.size(); ++i) {
    remap[result.original_ids[i]] = static_cast<NodeId>(i);
  }

  std::vector<Arc> arcs;
  for (NodeId old : result.original_ids) {
    for (NodeId w : g.out_neighbors(old)) {
      if (remap[w] != static_cast<NodeId>(-1)) arcs.push_back({remap[old], remap[w]});
    }
  }
  result.graph = OrientedGraph(result.original_ids.size(), arcs);
  return result;
}

Digraph square_graph(const OrientedGraph& g) {
  std::vector<Arc> arcs;
  arcs.reserve(g.arc_count());
  for (NodeId v = 0; v < g.node_count(); ++v) {
    for (NodeId w : g.out_neighbors(v)) arcs.push_back({v, w});
    for (NodeId z : second_out_neighbors(g, v)) arcs.push_back({v, z});
  }
  return Digraph(g.node_count(), arcs);
}

NeighborSet intersect_sorted(const NeighborSet& a, const NeighborSet& b) {
  NeighborSet result;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(result));
  return result;
}

}  // namespace glover
