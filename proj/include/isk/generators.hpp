#pragma once

#include <cstdint>
#include <string>

#include "isk/graph.hpp"

namespace isk {

// How random k-regular graphs are sampled.
//
// EdgeAddition repeatedly draws a uniform random pair among non-adjacent
// vertices that still have fewer than k edges; when no such pair is left but
// some vertex is still deficient, the partial graph is discarded and the
// build restarts with fresh randomness. Not exactly uniform over k-regular
// graphs.
//
// Pairing is the configuration model: a random perfect matching of k stubs
// per vertex, with whole-sample rejection of loops and multi-edges. Uniform
// over simple k-regular graphs.
enum class RegularStrategy { EdgeAddition, Pairing };

const char* strategy_name(RegularStrategy s);
RegularStrategy strategy_from_name(const std::string& name);

// Random graph ensemble: k-regular, or fixed edge count m = d*n/2.
struct EnsembleKind {
  enum class Kind { Regular, AverageDegree };

  Kind kind = Kind::Regular;
  int k = 3;        // Regular
  double avg = 3.0; // AverageDegree

  static EnsembleKind regular(int k) { return {Kind::Regular, k, 0.0}; }
  static EnsembleKind average_degree(double d) {
    return {Kind::AverageDegree, 0, d};
  }

  std::string label() const;  // "regular:3" or "avgdeg:3"
};

inline constexpr int kGeneratorMaxRestarts = 10000;

// k-regular simple graph on n vertices, deterministic in the seed.
// Requires n*k even and k < n.
Graph random_regular(int n, int k, std::uint64_t seed,
                     RegularStrategy strategy = RegularStrategy::EdgeAddition);

// Uniformly random simple graph with exactly d*n/2 edges, deterministic in
// the seed. Requires d*n even and d*n/2 <= n(n-1)/2.
Graph random_average_degree(int n, double d, std::uint64_t seed);

// Edge count for the average-degree ensemble; validates parity and range.
int average_degree_edge_count(int n, double d);

// Dispatch on the ensemble kind.
Graph generate(const EnsembleKind& ensemble, int n, std::uint64_t seed,
               RegularStrategy strategy);

}  // namespace isk
