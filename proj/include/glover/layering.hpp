#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "glover/digraph.hpp"

namespace glover {

enum class TieBreak { LowestId, HighestInDegree };

// Among nodes of globally minimum out-degree, pick deterministically:
// LowestId, or HighestInDegree (ties again broken by lowest id).
NodeId min_out_degree_node(const OrientedGraph& g, TieBreak tie_break = TieBreak::LowestId);

enum class ArcClass { Forward, Lateral, Back, FromUnreachable };

struct BackArc {
  NodeId tail = 0;
  NodeId head = 0;
  std::uint32_t delta = 0;  // dist(tail) - dist(head)
  friend auto operator<=>(const BackArc&, const BackArc&) = default;
};

class NotAnArcError : public GraphError {
 public:
  NotAnArcError(NodeId u, NodeId v)
      : GraphError("(" + std::to_string(u) + "," + std::to_string(v) + ") is not an arc") {}
};

class NotParentChildError : public GraphError {
 public:
  NotParentChildError(NodeId u, NodeId v)
      : GraphError("(" + std::to_string(u) + "," + std::to_string(v) +
                   ") is not a parent-child arc (head must sit one layer deeper)") {}
};

class BoundaryOutOfRangeError : public GraphError {
 public:
  explicit BoundaryOutOfRangeError(const std::string& what) : GraphError(what) {}
};

// Graph Level Order: BFS layers from a root. Nodes within a layer are ordered
// by (out-degree descending, id ascending). Back arcs are recorded, never
// rejected; unreachable nodes are kept out of all layers.
// Holds a pointer to the graph it was built from; the graph must outlive it.
class RootedLayering {
 public:
  RootedLayering(const OrientedGraph& g, NodeId root);

  const OrientedGraph& graph() const { return *g_; }
  NodeId root() const { return root_; }

  bool reachable(NodeId v) const {
    g_->check_id(v);
    return dist_[v] >= 0;
  }
  // Hop distance from root; only valid for reachable nodes.
  std::uint32_t dist(NodeId v) const {
    g_->check_id(v);
    return static_cast<std::uint32_t>(dist_[v]);
  }
  std::optional<std::uint32_t> dist_opt(NodeId v) const {
    g_->check_id(v);
    if (dist_[v] < 0) return std::nullopt;
    return static_cast<std::uint32_t>(dist_[v]);
  }

  // Layers R_0..R_k in intra-layer order.
  const std::vector<std::vector<NodeId>>& layers() const { return layers_; }
  const std::vector<NodeId>& layer(std::size_t i) const { return layers_[i]; }
  std::size_t layer_count() const { return layers_.size(); }

  // Position of a reachable node within its layer's intra-layer order.
  std::uint32_t order_in_layer(NodeId v) const { return order_[v]; }

  const std::vector<BackArc>& back_arcs() const { return back_arcs_; }
  const NeighborSet& unreachable() const { return unreachable_; }

  // Representative parent: first in-neighbor of v in the previous layer by
  // intra-layer order. Empty for the root, unreachable, or layer-0 nodes.
  std::optional<NodeId> representative_parent(NodeId v) const;

 private:
  const OrientedGraph* g_;
  NodeId root_;
  std::vector<std::int64_t> dist_;  // -1 = unreachable
  std::vector<std::vector<NodeId>> layers_;
  std::vector<std::uint32_t> order_;
  std::vector<BackArc> back_arcs_;
  NeighborSet unreachable_;
};

RootedLayering build_layering(const OrientedGraph& g, NodeId root);

ArcClass arc_class(const RootedLayering& l, NodeId tail, NodeId head);

// A child's out-neighbors split relative to one of its parents, following the
// case rule: back if the target sits in an earlier layer than the child;
// interior if same layer and also a target of the parent; exterior otherwise.
struct NeighborPartition {
  NodeId parent = 0;
  NodeId child = 0;
  NeighborSet interior;
  NeighborSet exterior;
  NeighborSet back;
};
NeighborPartition neighbor_partition(const RootedLayering& l, NodeId parent, NodeId child);

// Set-definitional exterior: N++(u) ∩ N+(v). Kept alongside the case-based
// partition so the two notions can be compared (they can disagree on lateral
// arcs); requires (u,v) to be an arc.
NeighborSet exterior_set_definitional(const OrientedGraph& g, NodeId u, NodeId v);

// Set-definitional interior: N+(u) ∩ N+(v); requires (u,v) to be an arc.
NeighborSet interior_set_definitional(const OrientedGraph& g, NodeId u, NodeId v);

// Layer sizes plus the informational per-layer bound |R_i| <= delta - (i-1)
// for i >= 1, where delta is the root's out-degree. The bound is a claim about
// graphs whose nodes all avoid degree-doubling, not an invariant.
struct LayerSizeReport {
  std::vector<std::size_t> sizes;
  std::size_t delta = 0;            // out-degree of the root
  std::vector<bool> bound_ok;       // entry j covers layer j+1
};
LayerSizeReport layer_size_sequence(const RootedLayering& l);

// A/B split at layer b: group_a = R_0..R_{b-1}, buffer = R_b,
// group_b = R_{b+1}..R_k plus unreachable nodes. Crossing arcs connect
// group_a and group_b directly (either direction), bypassing the buffer.
struct LayerSplit {
  NeighborSet group_a;
  NeighborSet buffer;
  NeighborSet group_b;
  std::vector<Arc> crossing;
};
LayerSplit split_layers(const RootedLayering& l, std::size_t boundary);

}  // namespace glover
