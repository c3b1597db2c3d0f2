#include "glover/layering.hpp"

#include <algorithm>
#include <deque>

namespace glover {

NodeId min_out_degree_node(const OrientedGraph& g, TieBreak tie_break) {
  if (g.node_count() == 0) throw EmptyGraphError();
  NodeId best = 0;
  for (NodeId v = 1; v < g.node_count(); ++v) {
    if (g.out_degree(v) < g.out_degree(best)) {
      best = v;
    } else if (g.out_degree(v) == g.out_degree(best) &&
               tie_break == TieBreak::HighestInDegree &&
               g.in_degree(v) > g.in_degree(best)) {
      best = v;
    }
  }
  return best;
}

RootedLayering::RootedLayering(const OrientedGraph& g, NodeId root)
    : g_(&g), root_(root) {
  g.check_id(root);
  dist_.assign(g.node_count(), -1);
  order_.assign(g.node_count(), 0);

  std::deque<NodeId> queue{root};
  dist_[root] = 0;
  while (!queue.empty()) {
    NodeId u = queue.front();
    queue.pop_front();
    for (NodeId w : g.out_neighbors(u)) {
      if (dist_[w] < 0) {
        dist_[w] = dist_[u] + 1;
        queue.push_back(w);
      }
    }
  }

  std::int64_t max_dist = 0;
  for (NodeId v = 0; v < g.node_count(); ++v) max_dist = std::max(max_dist, dist_[v]);
  layers_.assign(static_cast<std::size_t>(max_dist) + 1, {});
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (dist_[v] >= 0) {
      layers_[static_cast<std::size_t>(dist_[v])].push_back(v);
    } else {
      unreachable_.push_back(v);
    }
  }
  for (auto& layer : layers_) {
    std::sort(layer.begin(), layer.end(), [&](NodeId a, NodeId b) {
      if (g.out_degree(a) != g.out_degree(b)) return g.out_degree(a) > g.out_degree(b);
      return a < b;
    });
    for (std::size_t i = 0; i < layer.size(); ++i) {
      order_[layer[i]] = static_cast<std::uint32_t>(i);
    }
  }

  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (dist_[v] < 0) continue;
    for (NodeId w : g.out_neighbors(v)) {
      if (dist_[w] < dist_[v]) {
        back_arcs_.push_back({v, w, static_cast<std::uint32_t>(dist_[v] - dist_[w])});
      }
    }
  }
}

std::optional<NodeId> RootedLayering::representative_parent(NodeId v) const {
  if (!reachable(v) || dist(v) == 0) return std::nullopt;
  std::uint32_t want = dist(v) - 1;
  std::optional<NodeId> best;
  for (NodeId p : g_->in_neighbors(v)) {
    if (dist_[p] == want &&
        (!best || order_[p] < order_[*best])) {
      best = p;
    }
  }
  return best;
}

RootedLayering build_layering(const OrientedGraph& g, NodeId root) {
  return RootedLayering(g, root);
}

ArcClass arc_class(const RootedLayering& l, NodeId tail, NodeId head) {
  if (!l.graph().has_arc(tail, head)) throw NotAnArcError(tail, head);
  if (!l.reachable(tail)) return ArcClass::FromUnreachable;
  // Reachable tail implies reachable head (BFS explores every out-arc).
  std::uint32_t dt = l.dist(tail), dh = l.dist(head);
  if (dh == dt) return ArcClass::Lateral;
  if (dh == dt + 1) return ArcClass::Forward;
  return ArcClass::Back;
}

NeighborPartition neighbor_partition(const RootedLayering& l, NodeId parent, NodeId child) {
  const OrientedGraph& g = l.graph();
  if (!g.has_arc(parent, child)) throw NotParentChildError(parent, child);
  if (!l.reachable(parent) || l.dist(child) != l.dist(parent) + 1) {
    throw NotParentChildError(parent, child);
  }
  NeighborPartition part{parent, child, {}, {}, {}};
  std::uint32_t child_dist = l.dist(child);
  for (NodeId w : g.out_neighbors(child)) {
    if (l.dist(w) < child_dist) {
      part.back.push_back(w);
    } else if (l.dist(w) == child_dist && g.has_arc(parent, w)) {
      part.interior.push_back(w);
    } else {
      part.exterior.push_back(w);
    }
  }
  return part;
}

NeighborSet exterior_set_definitional(const OrientedGraph& g, NodeId u, NodeId v) {
  if (!g.has_arc(u, v)) throw NotAnArcError(u, v);
  return intersect_sorted(second_out_neighbors(g, u), g.out_neighbors(v));
}

NeighborSet interior_set_definitional(const OrientedGraph& g, NodeId u, NodeId v) {
  if (!g.has_arc(u, v)) throw NotAnArcError(u, v);
  return intersect_sorted(g.out_neighbors(u), g.out_neighbors(v));
}

LayerSizeReport layer_size_sequence(const RootedLayering& l) {
  LayerSizeReport report;
  report.delta = l.graph().out_degree(l.root());
  for (const auto& layer : l.layers()) report.sizes.push_back(layer.size());
  for (std::size_t i = 1; i < report.sizes.size(); ++i) {
    // |R_i| <= delta - (i - 1), with a negative right side meaning failure
    // unless the layer is empty (it never is, by construction).
    std::int64_t bound = static_cast<std::int64_t>(report.delta) -
                         (static_cast<std::int64_t>(i) - 1);
    report.bound_ok.push_back(static_cast<std::int64_t>(report.sizes[i]) <= bound);
  }
  return report;
}

LayerSplit split_layers(const RootedLayering& l, std::size_t boundary) {
  std::size_t k = l.layer_count() - 1;
  if (boundary < 1 || boundary > k) {
    throw BoundaryOutOfRangeError("boundary " + std::to_string(boundary) +
                                  " outside [1, " + std::to_string(k) + "]");
  }
  LayerSplit split;
  for (std::size_t i = 0; i < boundary; ++i) {
    for (NodeId v : l.layer(i)) split.group_a.push_back(v);
  }
  split.buffer = NeighborSet(l.layer(boundary).begin(), l.layer(boundary).end());
  for (std::size_t i = boundary + 1; i <= k; ++i) {
    for (NodeId v : l.layer(i)) split.group_b.push_back(v);
  }
  for (NodeId v : l.unreachable()) split.group_b.push_back(v);
  std::sort(split.group_a.begin(), split.group_a.end());
  std::sort(split.buffer.begin(), split.buffer.end());
  std::sort(split.group_b.begin(), split.group_b.end());

  const OrientedGraph& g = l.graph();
  std::vector<char> in_a(g.node_count(), 0), in_b(g.node_count(), 0);
  for (NodeId v : split.group_a) in_a[v] = 1;
  for (NodeId v : split.group_b) in_b[v] = 1;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    for (NodeId w : g.out_neighbors(v)) {
      if ((in_a[v] && in_b[w]) || (in_b[v] && in_a[w])) split.crossing.push_back({v, w});
    }
  }
  return split;
}

}  // namespace glover
