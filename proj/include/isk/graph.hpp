#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "isk/error.hpp"

namespace isk {

// Unordered vertex pair, normalized to first < second once inside a Graph.
using Edge = std::pair<int, int>;

// Simple undirected graph: no self-loops, no parallel edges. Vertices are
// labeled 1..n at every interface. Immutable after construction, safe to
// share across threads.
class Graph {
 public:
  Graph() = default;

  // Accepts pairs in either orientation; rejects self-loops, duplicates and
  // out-of-range endpoints.
  static Graph from_edge_list(int n, const std::vector<Edge>& pairs);

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  // Normalized (u < v) and sorted lexicographically.
  const std::vector<Edge>& edges() const { return edges_; }

  int degree(int v) const;
  const std::vector<int>& neighbors(int v) const;  // sorted ascending
  bool has_edge(int u, int v) const;

  std::vector<int> degree_sequence() const;  // index i holds degree(i+1)

  // Re-derives the adjacency structure from the edge set and checks the
  // class invariants; throws on violation. Generators call this as a
  // postcondition, property tests call it directly.
  void check_invariants() const;

 private:
  Graph(int n, std::vector<Edge> edges);

  void require_vertex(int v) const;

  int n_ = 0;
  std::vector<Edge> edges_;            // sorted, u < v
  std::vector<std::vector<int>> adj_;  // slot 0 unused, lists sorted
};

// Text format: first line "n m", then m lines "u v" with 1 <= u < v <= n,
// whitespace separated. Lines starting with '#' are ignored.
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Graph& g);
void write_graph_file(const std::string& path, const Graph& g);

}  // namespace isk
