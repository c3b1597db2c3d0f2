#include "glover/json_io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "json.hpp"

namespace glover {

namespace {

std::string layer_label(const RootedLayering& l, NodeId v) {
  if (!l.reachable(v)) return "unreachable";
  return "R_" + std::to_string(l.dist(v));
}

}  // namespace

std::string to_json(const OrientedGraph& g, const RootedLayering* l) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::object();
  for (NodeId v = 0; v < g.node_count(); ++v) {
    nlohmann::ordered_json entry;
    entry["targets"] = g.out_neighbors(v);
    if (l != nullptr) entry["neighborhood"] = layer_label(*l, v);
    doc[std::to_string(v)] = std::move(entry);
  }
  return doc.dump(2) + "\n";
}

ParsedGraph from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("document root must be an object");

  auto parse_id = [](const std::string& key) -> NodeId {
    if (key.empty() || !std::all_of(key.begin(), key.end(),
                                    [](unsigned char c) { return std::isdigit(c); })) {
      throw ParseError("node key '" + key + "' is not a non-negative integer");
    }
    try {
      unsigned long id = std::stoul(key);
      return static_cast<NodeId>(id);
    } catch (const std::exception&) {
      throw ParseError("node key '" + key + "' is out of range");
    }
  };

  std::vector<Arc> arcs;
  std::map<NodeId, std::string> labels;
  std::uint64_t max_id = 0;
  bool any = false;
  for (const auto& [key, entry] : doc.items()) {
    NodeId tail = parse_id(key);
    any = true;
    max_id = std::max<std::uint64_t>(max_id, tail);
    if (!entry.is_object()) throw ParseError("entry for node " + key + " must be an object");
    if (entry.contains("targets")) {
      if (!entry["targets"].is_array()) {
        throw ParseError("targets of node " + key + " must be an array");
      }
      for (const auto& t : entry["targets"]) {
        if (!t.is_number_unsigned()) {
          throw DanglingTargetError("target " + t.dump() + " of node " + key +
                                    " is not a valid node id");
        }
        NodeId head = t.get<NodeId>();
        max_id = std::max<std::uint64_t>(max_id, head);
        arcs.push_back({tail, head});
      }
    }
    if (entry.contains("neighborhood") && entry["neighborhood"].is_string()) {
      labels[tail] = entry["neighborhood"].get<std::string>();
    }
  }

  std::size_t node_count = any ? static_cast<std::size_t>(max_id) + 1 : 0;
  try {
    return {OrientedGraph(node_count, arcs), std::move(labels)};
  } catch (const GraphError& e) {
    throw ValidationError(e.what());
  }
}

std::vector<LabelDiff> audit_labels(const ParsedGraph& parsed, const RootedLayering& l) {
  std::vector<LabelDiff> diffs;
  for (const auto& [node, declared] : parsed.declared_labels) {
    std::string recomputed = layer_label(l, node);
    if (declared != recomputed) diffs.push_back({node, declared, recomputed});
  }
  return diffs;
}

std::string to_dot(const OrientedGraph& g, const RootedLayering* l) {
  std::ostringstream out;
  out << "digraph glover {\n";
  out << "  rankdir=TB;\n";
  if (l != nullptr) {
    for (std::size_t i = 0; i < l->layer_count(); ++i) {
      out << "  subgraph cluster_" << i << " {\n";
      out << "    label=\"R_" << i << "\";\n    ";
      for (NodeId v : l->layer(i)) out << v << "; ";
      out << "\n  }\n";
    }
    if (!l->unreachable().empty()) {
      out << "  // unreachable: ";
      for (NodeId v : l->unreachable()) out << v << " ";
      out << "\n";
    }
  }
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (g.out_degree(v) == 0 && g.in_degree(v) == 0) out << "  " << v << ";\n";
  }
  for (NodeId v = 0; v < g.node_count(); ++v) {
    for (NodeId w : g.out_neighbors(v)) {
      out << "  " << v << " -> " << w;
      if (l != nullptr) {
        switch (arc_class(*l, v, w)) {
          case ArcClass::Lateral: out << " [style=solid]"; break;
          case ArcClass::Forward: out << " [style=solid, color=gray]"; break;
          case ArcClass::Back: out << " [style=dashed]"; break;
          case ArcClass::FromUnreachable: out << " [style=dotted]"; break;
        }
      }
      out << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

bool validate_dot(const std::string& text) {
  std::istringstream in(text);
  std::string first;
  if (!(in >> first) || first != "digraph") return false;

  int depth = 0;
  for (char c : text) {
    if (c == '{') ++depth;
    if (c == '}') {
      --depth;
      if (depth < 0) return false;
    }
  }
  if (depth != 0) return false;

  // Every edge statement must look like "<int> -> <int>" and end with ';'.
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    std::size_t pos = line.find("->");
    if (pos == std::string::npos) continue;
    std::istringstream fields(line);
    long tail, head;
    std::string arrow;
    if (!(fields >> tail >> arrow >> head) || arrow != "->") return false;
    if (line.find(';') == std::string::npos) return false;
  }
  return true;
}

}  // namespace glover
