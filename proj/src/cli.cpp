#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "glover/digraph.hpp"
#include "glover/dnsa.hpp"
#include "glover/generators.hpp"
#include "glover/json_io.hpp"
#include "glover/layering.hpp"
#include "glover/seymour.hpp"
#include "glover/triangles.hpp"

namespace glover {

namespace {

using nlohmann::json;

struct CommonOptions {
  std::string fixture_name;
  std::string input_path;
  std::string format = "table";
  std::int64_t root = -1;
  std::string tie_break = "lowest-id";
};

TieBreak parse_tie_break(const std::string& s) {
  if (s == "lowest-id") return TieBreak::LowestId;
  if (s == "highest-in-degree") return TieBreak::HighestInDegree;
  throw CLI::ValidationError("--tie-break", "expected lowest-id or highest-in-degree");
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("GLOVER_SEED")) {
    return std::strtoull(env, nullptr, 10);
  }
  return 0;
}

OrientedGraph load_graph(const CommonOptions& opts, std::istream& in) {
  if (!opts.fixture_name.empty()) return fixture(opts.fixture_name);
  std::string text;
  if (!opts.input_path.empty()) {
    std::ifstream file(opts.input_path);
    if (!file) throw ParseError("cannot open input file '" + opts.input_path + "'");
    std::stringstream buf;
    buf << file.rdbuf();
    text = buf.str();
  } else {
    std::stringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  return from_json(text).graph;
}

NodeId resolve_root(const CommonOptions& opts, const OrientedGraph& g) {
  if (opts.root >= 0) {
    NodeId r = static_cast<NodeId>(opts.root);
    g.check_id(r);
    return r;
  }
  return min_out_degree_node(g, parse_tie_break(opts.tie_break));
}

json layering_to_json(const RootedLayering& l) {
  json doc;
  doc["root"] = l.root();
  doc["layers"] = l.layers();
  json back = json::array();
  for (const BackArc& b : l.back_arcs()) {
    back.push_back({{"tail", b.tail}, {"head", b.head}, {"delta", b.delta}});
  }
  doc["back_arcs"] = back;
  doc["unreachable"] = l.unreachable();
  LayerSizeReport sizes = layer_size_sequence(l);
  doc["layer_sizes"] = sizes.sizes;
  doc["delta"] = sizes.delta;
  doc["size_bound_ok"] = sizes.bound_ok;
  return doc;
}

json dnsa_to_json(const VerificationRecord& record) {
  const DnsaResult& r = record.result;
  json doc;
  doc["root"] = r.root;
  doc["halt_reason"] = halt_reason_name(r.halt_reason);
  if (r.marked_node) doc["marked_node"] = *r.marked_node;
  doc["path_from_root"] = r.path_from_root;
  if (const auto* e = std::get_if<BackEvidence>(&r.evidence)) {
    doc["evidence"] = {{"back_arc", {e->arc.tail, e->arc.head}}, {"delta", e->arc.delta}};
  } else if (const auto* e = std::get_if<DenseEvidence>(&r.evidence)) {
    doc["evidence"] = {{"parent", e->parent},
                       {"child", e->child},
                       {"interior_size", e->interior_size},
                       {"required", e->required}};
  } else if (const auto* e = std::get_if<SizeEvidence>(&r.evidence)) {
    doc["evidence"] = {{"layer_index", e->layer_index}, {"layer_size", e->layer_size}};
  } else if (const auto* e = std::get_if<PrecheckEvidence>(&r.evidence)) {
    doc["evidence"] = {{"root", e->root}, {"out_degree", e->out_degree}};
  }
  switch (record.oracle_confirms) {
    case OracleConfirms::Confirmed: doc["oracle_confirms"] = true; break;
    case OracleConfirms::Refuted: doc["oracle_confirms"] = false; break;
    case OracleConfirms::NotApplicable: doc["oracle_confirms"] = nullptr; break;
  }
  doc["oracle_seymour_set"] = record.oracle_seymour_set;
  return doc;
}

int cmd_analyze(const CommonOptions& opts, std::ostream& out, std::istream& in) {
  OrientedGraph g = load_graph(opts, in);
  SeymourReport oracle = seymour_oracle(g);
  NodeId root = resolve_root(opts, g);
  RootedLayering l(g, root);

  if (opts.format == "json") {
    json doc;
    doc["node_count"] = g.node_count();
    doc["arc_count"] = g.arc_count();
    doc["seymour_set"] = oracle.seymour_set;
    json records = json::array();
    for (const SeymourRecord& rec : oracle.records) {
      records.push_back({{"node", rec.node},
                         {"first_size", rec.first_size},
                         {"second_size", rec.second_size},
                         {"is_seymour", rec.is_seymour}});
    }
    doc["records"] = records;
    doc["dnsp_count"] = g.node_count() - oracle.seymour_set.size();
    doc["layering"] = layering_to_json(l);
    out << doc.dump(2) << "\n";
  } else {
    out << "nodes: " << g.node_count() << "  arcs: " << g.arc_count() << "\n";
    out << "root: " << root << " (out-degree " << g.out_degree(root) << ")\n";
    out << "layer sizes:";
    for (const auto& layer : l.layers()) out << " " << layer.size();
    out << "\nback arcs: " << l.back_arcs().size()
        << "  unreachable: " << l.unreachable().size() << "\n";
    out << "seymour set (" << oracle.seymour_set.size() << "):";
    for (NodeId v : oracle.seymour_set) out << " " << v;
    out << "\nnodes with decreasing neighborhoods: "
        << g.node_count() - oracle.seymour_set.size() << "\n";
  }
  return 0;
}

int cmd_layering(const CommonOptions& opts, std::ostream& out, std::istream& in) {
  OrientedGraph g = load_graph(opts, in);
  NodeId root = resolve_root(opts, g);
  RootedLayering l(g, root);
  if (opts.format == "json") {
    out << layering_to_json(l).dump(2) << "\n";
  } else {
    out << "root: " << root << "\n";
    for (std::size_t i = 0; i < l.layer_count(); ++i) {
      out << "R_" << i << ":";
      for (NodeId v : l.layer(i)) out << " " << v;
      out << "\n";
    }
    if (!l.unreachable().empty()) {
      out << "unreachable:";
      for (NodeId v : l.unreachable()) out << " " << v;
      out << "\n";
    }
    for (const BackArc& b : l.back_arcs()) {
      out << "back arc " << b.tail << " -> " << b.head << " (delta " << b.delta << ")\n";
    }
  }
  return 0;
}

int cmd_triangles(const CommonOptions& opts, bool list, std::ostream& out,
                  std::istream& in) {
  OrientedGraph g = load_graph(opts, in);
  NodeId root = resolve_root(opts, g);
  RootedLayering l(g, root);
  TriangleCensus census = triangle_census(g, l);
  if (opts.format == "json") {
    json doc;
    doc["root"] = root;
    doc["total"] = census.total;
    for (std::size_t i = 0; i < kTriangleTypeCount; ++i) {
      doc["counts"][triangle_type_name(static_cast<TriangleType>(i))] = census.counts[i];
    }
    doc["unclassifiable"] = census.unclassifiable;
    doc["unreachable"] = census.unreachable;
    if (list) {
      json items = json::array();
      for (const TransitiveTriangle& t : enumerate_transitive_triangles(g)) {
        json item = {{"x", t.x}, {"y", t.y}, {"z", t.z}};
        if (l.reachable(t.x) && l.reachable(t.y) && l.reachable(t.z)) {
          auto type = try_classify_triangle(l, t);
          item["type"] = type ? triangle_type_name(*type) : "unclassifiable";
        } else {
          item["type"] = "unreachable";
        }
        items.push_back(item);
      }
      doc["triangles"] = items;
    }
    out << doc.dump(2) << "\n";
  } else {
    out << "transitive triangles: " << census.total << "\n";
    for (std::size_t i = 0; i < kTriangleTypeCount; ++i) {
      out << "  " << triangle_type_name(static_cast<TriangleType>(i)) << ": "
          << census.counts[i] << "\n";
    }
    out << "  unclassifiable: " << census.unclassifiable
        << "\n  unreachable: " << census.unreachable << "\n";
    if (list) {
      for (const TransitiveTriangle& t : enumerate_transitive_triangles(g)) {
        out << "  (" << t.x << "," << t.y << "," << t.z << ")";
        if (l.reachable(t.x) && l.reachable(t.y) && l.reachable(t.z)) {
          auto type = try_classify_triangle(l, t);
          out << " " << (type ? triangle_type_name(*type) : "unclassifiable");
        } else {
          out << " unreachable";
        }
        out << "\n";
      }
    }
  }
  return 0;
}

int cmd_dnsa(const CommonOptions& opts, std::ostream& out, std::istream& in) {
  OrientedGraph g = load_graph(opts, in);
  std::optional<NodeId> root;
  if (opts.root >= 0) root = static_cast<NodeId>(opts.root);
  VerificationRecord record = verify_dnsa(g, root, parse_tie_break(opts.tie_break));
  if (opts.format == "json") {
    out << dnsa_to_json(record).dump(2) << "\n";
  } else {
    const DnsaResult& r = record.result;
    out << "root: " << r.root << "\nhalt: " << halt_reason_name(r.halt_reason) << "\n";
    if (r.marked_node) out << "marked node: " << *r.marked_node << "\n";
    out << "oracle confirms: "
        << (record.oracle_confirms == OracleConfirms::Confirmed      ? "yes"
            : record.oracle_confirms == OracleConfirms::Refuted      ? "NO"
                                                                     : "n/a")
        << "\n";
  }
  return 0;
}

int cmd_claims(const CommonOptions& opts, std::ostream& out, std::istream& in) {
  OrientedGraph g = load_graph(opts, in);
  std::optional<NodeId> root;
  if (opts.root >= 0) root = static_cast<NodeId>(opts.root);
  ClaimReport report = check_paper_claims(g, root);
  if (opts.format == "json") {
    json doc;
    doc["root"] = report.root;
    json claims = json::array();
    for (const ClaimRecord& rec : report.claims) {
      claims.push_back({{"claim", rec.claim},
                        {"premise_holds", rec.premise_holds},
                        {"conclusion_holds", rec.conclusion_holds},
                        {"status", claim_status_name(rec.status)},
                        {"instances_checked", rec.instances_checked},
                        {"witnesses", rec.witnesses}});
    }
    doc["claims"] = claims;
    out << doc.dump(2) << "\n";
  } else {
    out << "root: " << report.root << "\n";
    for (const ClaimRecord& rec : report.claims) {
      out << rec.claim << ": " << claim_status_name(rec.status) << " (instances "
          << rec.instances_checked << ")\n";
      for (const std::string& w : rec.witnesses) out << "  witness: " << w << "\n";
    }
  }
  return 0;
}

int cmd_split(const CommonOptions& opts, std::size_t boundary, std::ostream& out,
              std::istream& in) {
  OrientedGraph g = load_graph(opts, in);
  NodeId root = resolve_root(opts, g);
  RootedLayering l(g, root);
  LayerSplit split = split_layers(l, boundary);
  if (opts.format == "json") {
    json doc;
    doc["boundary"] = boundary;
    doc["group_a"] = split.group_a;
    doc["buffer"] = split.buffer;
    doc["group_b"] = split.group_b;
    json crossing = json::array();
    for (const Arc& a : split.crossing) crossing.push_back({a.tail, a.head});
    doc["crossing"] = crossing;
    doc["interference"] = split.crossing.size();
    out << doc.dump(2) << "\n";
  } else {
    auto dump_set = [&](const char* name, const NeighborSet& s) {
      out << name << ":";
      for (NodeId v : s) out << " " << v;
      out << "\n";
    };
    dump_set("group_a", split.group_a);
    dump_set("buffer", split.buffer);
    dump_set("group_b", split.group_b);
    out << "crossing arcs: " << split.crossing.size() << "\n";
    for (const Arc& a : split.crossing) out << "  " << a.tail << " -> " << a.head << "\n";
  }
  return 0;
}

int cmd_gen(const std::string& kind, std::size_t n, double p, std::uint64_t seed,
            const std::string& name, std::ostream& out) {
  OrientedGraph g;
  if (kind == "random") {
    g = gen_random_oriented(n, p, seed);
  } else if (kind == "tournament") {
    g = gen_tournament(n, seed);
  } else if (kind == "cycle") {
    g = gen_cycle(n);
  } else if (kind == "fixture") {
    g = fixture(name);
  } else {
    throw CLI::ValidationError("--kind", "expected random, tournament, cycle or fixture");
  }
  out << to_json(g);
  return 0;
}

int cmd_bench(bool quick, std::uint64_t seed, std::ostream& out) {
  struct Size {
    std::size_t n;
    std::size_t m;
  };
  std::vector<Size> sizes = quick
      ? std::vector<Size>{{10'000, 50'000}, {100'000, 500'000}}
      : std::vector<Size>{{10'000, 50'000}, {100'000, 500'000}, {1'000'000, 5'000'000}};

  out << "n        m        volume    best_ms   ns_per_unit\n";
  for (const Size& size : sizes) {
    double total = static_cast<double>(size.n) * (size.n - 1) / 2.0;
    double p = static_cast<double>(size.m) / total;
    OrientedGraph g = gen_random_oriented(size.n, p, seed);

    double best_ms = 1e300;
    for (int rep = 0; rep < 3; ++rep) {
      auto start = std::chrono::steady_clock::now();
      RootedLayering l(g, min_out_degree_node(g));
      DnsaResult r = run_dnsa(g);
      auto stop = std::chrono::steady_clock::now();
      // Touch the results so the work cannot be optimized away.
      volatile std::size_t sink = l.layer_count() + static_cast<std::size_t>(r.halt_reason);
      (void)sink;
      double ms = std::chrono::duration<double, std::milli>(stop - start).count();
      best_ms = std::min(best_ms, ms);
    }
    double volume = static_cast<double>(size.n + g.arc_count());
    out << size.n << " " << g.arc_count() << " " << volume << " " << best_ms << " "
        << best_ms * 1e6 / volume << "\n";
  }
  return 0;
}

int cmd_roundtrip(const CommonOptions& opts, std::ostream& out, std::istream& in) {
  std::string text;
  if (!opts.fixture_name.empty()) {
    text = to_json(fixture(opts.fixture_name));
  } else if (!opts.input_path.empty()) {
    std::ifstream file(opts.input_path);
    if (!file) throw ParseError("cannot open input file '" + opts.input_path + "'");
    std::stringstream buf;
    buf << file.rdbuf();
    text = buf.str();
  } else {
    std::stringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  ParsedGraph parsed = from_json(text);
  NodeId root = resolve_root(opts, parsed.graph);
  RootedLayering l(parsed.graph, root);
  std::string canonical = to_json(parsed.graph, &l);
  std::vector<LabelDiff> diffs = audit_labels(parsed, l);
  if (opts.format == "json") {
    json doc;
    doc["canonical"] = json::parse(canonical);
    json audit = json::array();
    for (const LabelDiff& d : diffs) {
      audit.push_back(
          {{"node", d.node}, {"declared", d.declared}, {"recomputed", d.recomputed}});
    }
    doc["label_audit"] = audit;
    out << doc.dump(2) << "\n";
  } else {
    out << canonical;
    for (const LabelDiff& d : diffs) {
      out << "label audit: node " << d.node << " declared " << d.declared
          << " but sits in " << d.recomputed << "\n";
    }
  }
  return 0;
}

}  // namespace

int cli_dispatch(const std::vector<std::string>& args, std::ostream& out,
                 std::ostream& err, std::istream& in) {
  CLI::App app{"Graph level order toolkit for oriented graphs"};
  app.require_subcommand(1);

  CommonOptions opts;
  auto add_common = [&](CLI::App* sub, bool with_root = true) {
    sub->add_option("--fixture", opts.fixture_name, "named fixture graph");
    sub->add_option("--input", opts.input_path, "JSON graph document (default: stdin)");
    sub->add_option("--format", opts.format, "table or json")
        ->check(CLI::IsMember({"table", "json"}));
    if (with_root) {
      sub->add_option("--root", opts.root, "root override (default: min out-degree)");
      sub->add_option("--tie-break", opts.tie_break, "lowest-id or highest-in-degree")
          ->check(CLI::IsMember({"lowest-id", "highest-in-degree"}));
    }
  };

  CLI::App* analyze = app.add_subcommand("analyze", "oracle report and layer summary");
  add_common(analyze);

  CLI::App* layering = app.add_subcommand("layering", "layers, back arcs, size bounds");
  add_common(layering);

  bool list_triangles = false;
  CLI::App* triangles = app.add_subcommand("triangles", "transitive triangle census");
  add_common(triangles);
  triangles->add_flag("--list", list_triangles, "list every triangle with its class");

  CLI::App* dnsa = app.add_subcommand("dnsa", "run the traversal and verify vs oracle");
  add_common(dnsa);

  CLI::App* claims = app.add_subcommand("claims", "evaluate documented claims");
  add_common(claims);

  std::string gen_kind = "random", gen_name = "cycle5";
  std::size_t gen_n = 10;
  double gen_p = 0.3;
  std::uint64_t seed = default_seed();
  CLI::App* gen = app.add_subcommand("gen", "emit a generated graph as JSON");
  gen->add_option("--kind", gen_kind, "random, tournament, cycle or fixture");
  gen->add_option("--n", gen_n, "node count");
  gen->add_option("--p", gen_p, "pair probability for random graphs");
  gen->add_option("--seed", seed, "stream seed (default: GLOVER_SEED or 0)");
  gen->add_option("--name", gen_name, "fixture name when --kind fixture");

  std::size_t boundary = 1;
  CLI::App* split = app.add_subcommand("split", "A/B layer split at a boundary");
  add_common(split);
  split->add_option("--boundary", boundary, "boundary layer index")->required();

  bool quick = false;
  CLI::App* bench = app.add_subcommand("bench", "layering + traversal timing table");
  bench->add_flag("--quick", quick, "skip the largest size");
  bench->add_option("--seed", seed, "stream seed");

  CLI::App* roundtrip = app.add_subcommand("roundtrip", "validate and canonicalize JSON");
  add_common(roundtrip);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << e.what() << "\n";
    return 1;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(opts, out, in);
    if (layering->parsed()) return cmd_layering(opts, out, in);
    if (triangles->parsed()) return cmd_triangles(opts, list_triangles, out, in);
    if (dnsa->parsed()) return cmd_dnsa(opts, out, in);
    if (claims->parsed()) return cmd_claims(opts, out, in);
    if (gen->parsed()) return cmd_gen(gen_kind, gen_n, gen_p, seed, gen_name, out);
    if (split->parsed()) return cmd_split(opts, boundary, out, in);
    if (bench->parsed()) return cmd_bench(quick, seed, out);
    if (roundtrip->parsed()) return cmd_roundtrip(opts, out, in);
    err << "no subcommand given\n";
    return 1;
  } catch (const CLI::Error& e) {
    err << e.what() << "\n";
    return 1;
  } catch (const GraphError& e) {
    err << "input error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace glover
