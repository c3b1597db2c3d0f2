#include "glover/generators.hpp"

#include <cmath>
#include <map>
#include <vector>

namespace glover {

namespace {

// Pairs {a,b}, a < b, are indexed lexicographically:
// index(a,b) = a*(n-1) - a*(a-1)/2 + (b - a - 1).
std::uint64_t pairs_before_row(std::uint64_t a, std::uint64_t n) {
  return a * (n - 1) - a * (a - 1) / 2;
}

std::pair<NodeId, NodeId> decode_pair(std::uint64_t index, std::uint64_t n) {
  std::uint64_t lo = 0, hi = n - 1;  // row a in [0, n-1)
  while (lo < hi) {
    std::uint64_t mid = (lo + hi + 1) / 2;
    if (pairs_before_row(mid, n) <= index) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  std::uint64_t b = lo + 1 + (index - pairs_before_row(lo, n));
  return {static_cast<NodeId>(lo), static_cast<NodeId>(b)};
}

void orient_and_push(SplitMix64& rng, NodeId a, NodeId b, std::vector<Arc>& arcs) {
  if (rng.next() & 1) {
    arcs.push_back({a, b});
  } else {
    arcs.push_back({b, a});
  }
}

}  // namespace

OrientedGraph gen_random_oriented(std::size_t n, double p, std::uint64_t seed) {
  std::vector<Arc> arcs;
  if (n >= 2 && p > 0.0) {
    std::uint64_t total = static_cast<std::uint64_t>(n) * (n - 1) / 2;
    SplitMix64 rng(seed);
    if (p >= 1.0) {
      for (std::uint64_t t = 0; t < total; ++t) {
        auto [a, b] = decode_pair(t, n);
        orient_and_push(rng, a, b, arcs);
      }
    } else {
      double log1mp = std::log1p(-p);
      std::uint64_t index = 0;
      while (true) {
        // Geometric number of rejected pairs before the next kept one.
        double u = rng.next_double();
        double skip = std::floor(std::log1p(-u) / log1mp);
        if (skip >= static_cast<double>(total)) break;  // guards huge skips
        index += static_cast<std::uint64_t>(skip);
        if (index >= total) break;
        auto [a, b] = decode_pair(index, n);
        orient_and_push(rng, a, b, arcs);
        ++index;
      }
    }
  }
  return OrientedGraph(n, arcs);
}

OrientedGraph gen_tournament(std::size_t n, std::uint64_t seed) {
  std::vector<Arc> arcs;
  SplitMix64 rng(seed);
  for (NodeId a = 0; a + 1 < n; ++a) {
    for (NodeId b = a + 1; b < n; ++b) orient_and_push(rng, a, b, arcs);
  }
  return OrientedGraph(n, arcs);
}

OrientedGraph gen_cycle(std::size_t n) {
  if (n < 3) throw CycleTooShortError(n);
  std::vector<Arc> arcs;
  for (NodeId i = 0; i < n; ++i) arcs.push_back({i, static_cast<NodeId>((i + 1) % n)});
  return OrientedGraph(n, arcs);
}

OrientedGraph fixture(const std::string& name) {
  if (name == "cycle5") return gen_cycle(5);
  if (name == "nbr0ex") {
    // Root 0 with children 1..3; 3 and 2 close cycles onto 1; sinks 4..6.
    return OrientedGraph(7, {{0, 1}, {0, 2}, {0, 3},
                             {3, 2}, {3, 1}, {3, 4}, {3, 5},
                             {2, 1}, {2, 4}, {2, 5},
                             {1, 4}, {1, 5}, {1, 6}});
  }
  if (name == "furtherex") {
    // Root 0; first layer {1,2,3} forms a directed 3-cycle; sinks 6..8.
    return OrientedGraph(9, {{0, 1}, {0, 2}, {0, 3},
                             {1, 2}, {1, 4}, {1, 5},
                             {2, 3}, {2, 4}, {2, 5},
                             {3, 1}, {3, 4}, {3, 5},
                             {4, 5}, {4, 6}, {4, 7},
                             {5, 6}, {5, 7}, {5, 8}});
  }
  if (name == "irrint") {
    // Published as a table keyed 0..11 with targets up to 16 and id 12 unused;
    // stored densely here (13..16 become 12..15).
    const std::map<int, std::vector<int>> rows = {
        {0, {1, 2, 3, 4, 5, 6}},      {1, {2, 3, 4, 8, 9, 10}},
        {2, {3, 7, 8, 9, 10, 11}},    {3, {4, 7, 8, 9, 10, 11}},
        {4, {5, 7, 8, 9, 10, 11}},    {5, {6, 7, 8, 9, 10, 11}},
        {6, {1, 7, 8, 9, 10, 11}},    {7, {8, 13, 14, 15, 16}},
        {8, {9, 13, 14, 15, 16}},     {9, {10, 13, 14, 15, 16}},
        {10, {11, 13, 14, 15, 16}},   {11, {8, 13, 14, 15, 16}}};
    auto dense = [](int id) { return static_cast<NodeId>(id < 12 ? id : id - 1); };
    std::vector<Arc> arcs;
    for (const auto& [tail, heads] : rows) {
      for (int head : heads) arcs.push_back({dense(tail), dense(head)});
    }
    return OrientedGraph(16, arcs);
  }
  if (name == "backtri") {
    // Minimal graph with a back arc: 3 sits one layer past 2, then hits it.
    return OrientedGraph(5, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {3, 2}});
  }
  throw UnknownFixtureError(name);
}

}  // namespace glover
