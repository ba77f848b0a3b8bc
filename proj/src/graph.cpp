#include "isk/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace isk {

Graph Graph::from_edge_list(int n, const std::vector<Edge>& pairs) {
  if (n < 0) fail(Errc::bad_config, "vertex count must be nonnegative");
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (const auto& [a, b] : pairs) {
    if (a < 1 || a > n || b < 1 || b > n)
      fail(Errc::vertex_out_of_range,
           "edge {" + std::to_string(a) + "," + std::to_string(b) +
               "} out of range 1.." + std::to_string(n));
    if (a == b)
      fail(Errc::self_loop, "self-loop at vertex " + std::to_string(a));
    edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(edges.begin(), edges.end());
  auto dup = std::adjacent_find(edges.begin(), edges.end());
  if (dup != edges.end())
    fail(Errc::duplicate_edge, "duplicate edge {" + std::to_string(dup->first) +
                                   "," + std::to_string(dup->second) + "}");
  return Graph(n, std::move(edges));
}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  adj_.resize(n_ + 1);
  for (const auto& [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& list : adj_) std::sort(list.begin(), list.end());
}

void Graph::require_vertex(int v) const {
  if (v < 1 || v > n_)
    fail(Errc::vertex_out_of_range, "vertex " + std::to_string(v) +
                                        " out of range 1.." + std::to_string(n_));
}

int Graph::degree(int v) const {
  require_vertex(v);
  return static_cast<int>(adj_[v].size());
}

const std::vector<int>& Graph::neighbors(int v) const {
  require_vertex(v);
  return adj_[v];
}

bool Graph::has_edge(int u, int v) const {
  require_vertex(u);
  require_vertex(v);
  const auto& list = adj_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> degs(n_);
  for (int v = 1; v <= n_; ++v) degs[v - 1] = static_cast<int>(adj_[v].size());
  return degs;
}

void Graph::check_invariants() const {
  for (const auto& [u, v] : edges_) {
    if (u == v) fail(Errc::self_loop, "invariant: self-loop");
    if (u < 1 || v > n_ || u > v)
      fail(Errc::vertex_out_of_range, "invariant: edge endpoints");
  }
  for (std::size_t i = 1; i < edges_.size(); ++i)
    if (edges_[i - 1] == edges_[i]) fail(Errc::duplicate_edge, "invariant: duplicate edge");
  // adjacency consistent with the edge set, both directions
  std::size_t directed = 0;
  for (int v = 1; v <= n_; ++v) {
    for (int u : adj_[v]) {
      ++directed;
      Edge e{std::min(u, v), std::max(u, v)};
      if (!std::binary_search(edges_.begin(), edges_.end(), e))
        fail(Errc::duplicate_edge, "invariant: adjacency not in edge set");
    }
  }
  if (directed != 2 * edges_.size())
    fail(Errc::duplicate_edge, "invariant: adjacency/edge count mismatch");
}

Graph read_graph(std::istream& in) {
  std::string line;
  auto next_data_line = [&](std::string& out) -> bool {
    while (std::getline(in, line)) {
      std::size_t pos = line.find_first_not_of(" \t\r");
      if (pos == std::string::npos) continue;
      if (line[pos] == '#') continue;
      out = line;
      return true;
    }
    return false;
  };

  std::string header;
  if (!next_data_line(header)) fail(Errc::parse_error, "missing graph header line");
  std::istringstream hs(header);
  long long n = 0, m = 0;
  if (!(hs >> n >> m) || n < 0 || m < 0)
    fail(Errc::parse_error, "bad graph header: " + header);

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    std::string row;
    if (!next_data_line(row))
      fail(Errc::parse_error, "expected " + std::to_string(m) + " edges, got " +
                                  std::to_string(i));
    std::istringstream rs(row);
    int u = 0, v = 0;
    if (!(rs >> u >> v)) fail(Errc::parse_error, "bad edge line: " + row);
    if (u >= v) fail(Errc::parse_error, "edge lines must satisfy u < v: " + row);
    edges.emplace_back(u, v);
  }
  return Graph::from_edge_list(static_cast<int>(n), edges);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::io_error, "cannot open " + path);
  return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_graph_file(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) fail(Errc::io_error, "cannot open " + path + " for writing");
  write_graph(out, g);
  if (!out) fail(Errc::io_error, "write failed: " + path);
}

}  // namespace isk
