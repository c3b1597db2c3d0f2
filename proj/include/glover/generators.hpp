#pragma once

#include <cstdint>
#include <string>

#include "glover/digraph.hpp"

namespace glover {

class CycleTooShortError : public GraphError {
 public:
  explicit CycleTooShortError(std::size_t n)
      : GraphError("cycle length " + std::to_string(n) +
                   " below 3 would need a symmetric pair") {}
};

class UnknownFixtureError : public GraphError {
 public:
  explicit UnknownFixtureError(const std::string& name)
      : GraphError("unknown fixture '" + name + "'") {}
};

// Deterministic 64-bit stream (splitmix64). Chosen over <random> engines with
// distributions because distribution output is not pinned by the standard and
// generated corpora must be bit-stable across toolchains.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // Uniform in [0, 1) with 53 bits of precision.
  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  // Uniform in [0, bound).
  std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

 private:
  std::uint64_t state_;
};

// Each unordered pair {a,b}, visited in lexicographic order, is kept with
// probability p; each kept pair is oriented by a separate coin. Pair selection
// uses geometric skip sampling, so sparse graphs cost O(arcs) rather than
// O(n^2) while keeping the same per-pair Bernoulli distribution; results are
// bit-stable for a given seed.
OrientedGraph gen_random_oriented(std::size_t n, double p, std::uint64_t seed);

// Every pair present, orientation by coin: a random tournament.
OrientedGraph gen_tournament(std::size_t n, std::uint64_t seed);

// Directed cycle 0 -> 1 -> ... -> n-1 -> 0.
OrientedGraph gen_cycle(std::size_t n);

// Hand-checked graphs used throughout the tests:
//   cycle5    five-node directed cycle
//   nbr0ex    seven nodes; the root's three children feed three sinks
//   furtherex nine nodes; a 3-cycle first layer under the root
//   irrint    sixteen nodes; irregular first-layer interior degrees
//   backtri   five nodes with one back arc relative to root 0
OrientedGraph fixture(const std::string& name);

inline const char* kFixtureNames[] = {"cycle5", "nbr0ex", "furtherex", "irrint", "backtri"};

}  // namespace glover
