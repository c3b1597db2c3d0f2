#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace glover {

// Dense node index in [0, node_count).
using NodeId = std::uint32_t;

// Sorted, duplicate-free list of node ids.
using NeighborSet = std::vector<NodeId>;

struct Arc {
  NodeId tail = 0;
  NodeId head = 0;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

// Base class for all structural errors raised by the library.
class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SelfLoopError : public GraphError {
 public:
  explicit SelfLoopError(NodeId u)
      : GraphError("self-loop on node " + std::to_string(u)), node(u) {}
  NodeId node;
};

class SymmetricPairError : public GraphError {
 public:
  SymmetricPairError(NodeId u, NodeId v)
      : GraphError("symmetric arc pair between " + std::to_string(u) + " and " +
                   std::to_string(v)),
        a(u),
        b(v) {}
  NodeId a, b;
};

class DuplicateArcError : public GraphError {
 public:
  DuplicateArcError(NodeId u, NodeId v)
      : GraphError("duplicate arc " + std::to_string(u) + "->" + std::to_string(v)),
        tail(u),
        head(v) {}
  NodeId tail, head;
};

class IdOutOfRangeError : public GraphError {
 public:
  explicit IdOutOfRangeError(const std::string& what) : GraphError(what) {}
};

class EmptyGraphError : public GraphError {
 public:
  EmptyGraphError() : GraphError("operation requires a non-empty graph") {}
};

// General directed graph: loop-free but symmetric pairs are permitted.
// Used for the square graph, whose construction can create 2-cycles.
class Digraph {
 public:
  Digraph() = default;
  Digraph(std::size_t node_count, const std::vector<Arc>& arcs);

  std::size_t node_count() const { return out_.size(); }
  std::size_t arc_count() const { return arc_count_; }

  const NeighborSet& out_neighbors(NodeId v) const {
    check_id(v);
    return out_[v];
  }
  const NeighborSet& in_neighbors(NodeId v) const {
    check_id(v);
    return in_[v];
  }
  std::size_t out_degree(NodeId v) const { return out_neighbors(v).size(); }
  std::size_t in_degree(NodeId v) const { return in_neighbors(v).size(); }

  // Binary search over the sorted adjacency row.
  bool has_arc(NodeId u, NodeId v) const;

  // Arcs in (tail, head) lexicographic order.
  std::vector<Arc> arcs() const;

  void check_id(NodeId v) const {
    if (v >= out_.size()) {
      throw IdOutOfRangeError("node id " + std::to_string(v) +
                              " out of range [0, " + std::to_string(out_.size()) + ")");
    }
  }

 protected:
  // Populates adjacency without validation; rows end up sorted and deduplicated.
  void assign(std::size_t node_count, const std::vector<Arc>& arcs, bool validate_oriented);

  std::vector<NeighborSet> out_;
  std::vector<NeighborSet> in_;
  std::size_t arc_count_ = 0;
};

// Oriented graph: additionally no self-loops, no symmetric arc pair, and no
// duplicate arcs. Immutable after construction.
class OrientedGraph : public Digraph {
 public:
  OrientedGraph() = default;
  OrientedGraph(std::size_t node_count, const std::vector<Arc>& arcs);

  friend bool operator==(const OrientedGraph& a, const OrientedGraph& b) {
    return a.out_ == b.out_;
  }
};

// Validating constructor wrapper matching the operation vocabulary.
OrientedGraph build_graph(std::size_t node_count, const std::vector<Arc>& arc_list);

// First out-neighborhood N+(v) (copy of the adjacency row).
NeighborSet out_neighbors(const Digraph& g, NodeId v);

// Nodes at directed distance exactly 2 from v: excludes v and N+(v).
NeighborSet second_out_neighbors(const Digraph& g, NodeId v);

// Induced subgraph on s, re-indexed densely; original_ids maps new -> old.
struct InducedSubgraph {
  OrientedGraph graph;
  std::vector<NodeId> original_ids;
};
InducedSubgraph induced_subgraph(const OrientedGraph& g, const NeighborSet& s);

// Square graph: arc (u,v) iff directed distance from u to v is 1 or 2.
// The result is a plain digraph; squaring can produce symmetric pairs.
Digraph square_graph(const OrientedGraph& g);

// Sorted-vector set intersection helper shared across modules.
NeighborSet intersect_sorted(const NeighborSet& a, const NeighborSet& b);

}  // namespace glover
