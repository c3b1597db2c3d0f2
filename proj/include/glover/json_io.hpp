#pragma once

#include <map>
#include <string>
#include <vector>

#include "glover/digraph.hpp"
#include "glover/layering.hpp"

namespace glover {

class ParseError : public GraphError {
 public:
  explicit ParseError(const std::string& what) : GraphError(what) {}
};

class ValidationError : public GraphError {
 public:
  explicit ValidationError(const std::string& what) : GraphError(what) {}
};

class DanglingTargetError : public GraphError {
 public:
  explicit DanglingTargetError(const std::string& what) : GraphError(what) {}
};

// Canonical text form: one JSON object keyed by stringified node ids in
// numeric order; every node appears; targets sorted ascending. When a
// layering is supplied each node carries a "neighborhood" label "R_i"
// ("unreachable" for nodes outside all layers).
std::string to_json(const OrientedGraph& g, const RootedLayering* l = nullptr);

struct ParsedGraph {
  OrientedGraph graph;
  // Labels found in the document, if any. Advisory only: layers are always
  // recomputed, never read back from the document.
  std::map<NodeId, std::string> declared_labels;
};

// Node count is inferred as one past the largest id mentioned as a key or
// target; ids without keys are sinks. Structural violations surface as
// ValidationError wrapping the underlying graph error.
ParsedGraph from_json(const std::string& text);

struct LabelDiff {
  NodeId node = 0;
  std::string declared;
  std::string recomputed;
};

// Nodes whose declared neighborhood label disagrees with the recomputed
// layering (sorted by node id).
std::vector<LabelDiff> audit_labels(const ParsedGraph& parsed, const RootedLayering& l);

// DOT rendering: one cluster per layer when a layering is given; back arcs
// dashed, forward arcs gray, arcs from unreachable nodes dotted.
std::string to_dot(const OrientedGraph& g, const RootedLayering* l = nullptr);

// Minimal structural check used in tests: header, balanced braces, and
// well-formed node/edge statements.
bool validate_dot(const std::string& text);

// CLI entry point (exposed for tests). Returns the process exit status:
// 0 success, 1 input/usage error, 2 internal failure.
int cli_dispatch(const std::vector<std::string>& args, std::ostream& out,
                 std::ostream& err, std::istream& in);

}  // namespace glover
