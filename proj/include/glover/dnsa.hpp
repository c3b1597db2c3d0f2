#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "glover/digraph.hpp"
#include "glover/layering.hpp"
#include "glover/seymour.hpp"

namespace glover {

class LayerTooSmallError : public GraphError {
 public:
  LayerTooSmallError(std::size_t n, std::size_t i)
      : GraphError("layer of size " + std::to_string(n) +
                   " cannot give every node " + std::to_string(i) + " targets") {}
};

class OrientationInfeasibleError : public GraphError {
 public:
  OrientationInfeasibleError(std::size_t n, std::size_t i)
      : GraphError("circulant steps 1.." + std::to_string(i) + " on " +
                   std::to_string(n) + " nodes force a symmetric pair") {}
};

// Circulant interior assignment: node at position j targets positions
// j+1 .. j+i (mod n). Infeasible once n <= 2i (some step and its complement
// would both be used, creating a 2-cycle).
struct InteriorAssignment {
  std::vector<NodeId> layer;
  std::size_t required = 0;                    // i
  std::vector<std::vector<NodeId>> assigned;   // per layer position, i targets
};
InteriorAssignment map_interior_degrees(const std::vector<NodeId>& layer, std::size_t i);

enum class HaltReason { Back, Dense, Size, LowDegreePrecheck, Exhausted };

const char* halt_reason_name(HaltReason r);

struct BackEvidence {
  BackArc arc;
};
struct DenseEvidence {
  NodeId parent = 0;
  NodeId child = 0;
  std::size_t interior_size = 0;
  std::size_t required = 0;  // the layer index i
};
struct SizeEvidence {
  std::size_t layer_index = 0;
  std::size_t layer_size = 0;
};
struct PrecheckEvidence {
  NodeId root = 0;
  std::size_t out_degree = 0;
};
using DnsaEvidence =
    std::variant<std::monostate, BackEvidence, DenseEvidence, SizeEvidence, PrecheckEvidence>;

struct DnsaResult {
  NodeId root = 0;
  HaltReason halt_reason = HaltReason::Exhausted;
  std::optional<NodeId> marked_node;
  DnsaEvidence evidence;
  std::vector<NodeId> path_from_root;  // representative-parent chain
};

// Decreasing Neighborhood Sequence Algorithm. Root defaults to the minimum
// out-degree node. Pre-stage: a root of out-degree <= 2 halts immediately
// (LowDegreePrecheck). Otherwise layers are scanned in order; per node,
// a back arc halts first (Back), then a representative-parent interior
// intersection smaller than the layer index halts (Dense, marking the
// parent); after each layer with index > 0, size <= 2 halts (Size).
DnsaResult run_dnsa(const OrientedGraph& g, std::optional<NodeId> root = std::nullopt,
                    TieBreak tie_break = TieBreak::LowestId);

enum class OracleConfirms { Confirmed, Refuted, NotApplicable };

struct VerificationRecord {
  DnsaResult result;
  OracleConfirms oracle_confirms = OracleConfirms::NotApplicable;
  NeighborSet oracle_seymour_set;
};

// Runs the algorithm, then checks the marked node against the brute-force
// oracle. Confirmed only when the marked node literally satisfies
// |N++| >= |N+|; disagreements are recorded, never assumed away.
VerificationRecord verify_dnsa(const OrientedGraph& g,
                               std::optional<NodeId> root = std::nullopt,
                               TieBreak tie_break = TieBreak::LowestId);

enum class ClaimStatus { Holds, Violated, NotApplicable };

const char* claim_status_name(ClaimStatus s);

struct ClaimRecord {
  std::string claim;
  bool premise_holds = false;
  bool conclusion_holds = true;
  ClaimStatus status = ClaimStatus::NotApplicable;
  std::size_t instances_checked = 0;
  std::vector<std::string> witnesses;  // human-readable violation evidence
};

struct ClaimReport {
  NodeId root = 0;
  std::vector<ClaimRecord> claims;
};

// Evaluates each documented claim as a material conditional on this graph:
// premise and conclusion are computed independently; a claim with a false
// premise is NotApplicable, never Violated. Purely observational.
ClaimReport check_paper_claims(const OrientedGraph& g,
                               std::optional<NodeId> root = std::nullopt);

struct LayerDensity {
  std::size_t layer_index = 0;
  std::size_t node_count = 0;
  std::size_t intra_arcs = 0;
  double density = 0.0;  // intra arcs / (n choose 2); 0 for layers of size < 2
  std::size_t seymour_count = 0;
};

struct DenseReport {
  std::vector<LayerDensity> layers;
  std::size_t max_density_layer = 0;
};

DenseReport dense_report(const RootedLayering& l, const OrientedGraph& g);

}  // namespace glover
