#include "isk/generators.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <vector>

#include "isk/rng.hpp"

namespace isk {

const char* strategy_name(RegularStrategy s) {
  return s == RegularStrategy::EdgeAddition ? "edge-addition" : "pairing";
}

RegularStrategy strategy_from_name(const std::string& name) {
  if (name == "edge-addition") return RegularStrategy::EdgeAddition;
  if (name == "pairing") return RegularStrategy::Pairing;
  fail(Errc::bad_config, "unknown generator strategy: " + name);
}

std::string EnsembleKind::label() const {
  if (kind == Kind::Regular) return "regular:" + std::to_string(k);
  std::string d = std::to_string(avg);
  d.erase(d.find_last_not_of('0') + 1);
  if (!d.empty() && d.back() == '.') d.pop_back();
  return "avgdeg:" + d;
}

namespace {

void check_regular_args(int n, int k) {
  if (n < 0 || k < 0) fail(Errc::bad_config, "n and k must be nonnegative");
  if (k >= n)
    fail(Errc::impossible_degree_sequence,
         "degree " + std::to_string(k) + " needs more than " +
             std::to_string(n) + " vertices");
  if ((static_cast<long long>(n) * k) % 2 != 0)
    fail(Errc::impossible_degree_sequence,
         "n*k must be even, got n=" + std::to_string(n) +
             " k=" + std::to_string(k));
}

// One attempt of the incremental method; empty result means it got stuck.
std::vector<Edge> edge_addition_attempt(int n, int k, Rng& rng) {
  const int target = n * k / 2;
  std::vector<int> deg(n + 1, 0);
  std::vector<char> adj(static_cast<std::size_t>(n + 1) * (n + 1), 0);
  std::vector<Edge> edges;
  edges.reserve(target);
  std::vector<Edge> candidates;
  while (static_cast<int>(edges.size()) < target) {
    candidates.clear();
    for (int u = 1; u <= n; ++u) {
      if (deg[u] >= k) continue;
      for (int v = u + 1; v <= n; ++v)
        if (deg[v] < k && !adj[static_cast<std::size_t>(u) * (n + 1) + v])
          candidates.emplace_back(u, v);
    }
    if (candidates.empty()) return {};  // stuck, caller restarts
    const auto [u, v] = candidates[rng.below(candidates.size())];
    adj[static_cast<std::size_t>(u) * (n + 1) + v] = 1;
    adj[static_cast<std::size_t>(v) * (n + 1) + u] = 1;
    ++deg[u];
    ++deg[v];
    edges.emplace_back(u, v);
  }
  return edges;
}

// One attempt of the configuration model; empty result means the matching
// produced a loop or a repeated pair.
std::vector<Edge> pairing_attempt(int n, int k, Rng& rng) {
  std::vector<int> stubs;
  stubs.reserve(static_cast<std::size_t>(n) * k);
  for (int v = 1; v <= n; ++v)
    for (int i = 0; i < k; ++i) stubs.push_back(v);
  rng.shuffle(stubs);

  std::vector<char> adj(static_cast<std::size_t>(n + 1) * (n + 1), 0);
  std::vector<Edge> edges;
  edges.reserve(stubs.size() / 2);
  for (std::size_t i = 0; i < stubs.size(); i += 2) {
    int u = stubs[i], v = stubs[i + 1];
    if (u == v) return {};
    if (u > v) std::swap(u, v);
    auto& seen = adj[static_cast<std::size_t>(u) * (n + 1) + v];
    if (seen) return {};
    seen = 1;
    edges.emplace_back(u, v);
  }
  return edges;
}

}  // namespace

Graph random_regular(int n, int k, std::uint64_t seed,
                     RegularStrategy strategy) {
  check_regular_args(n, k);
  Rng rng(seed);
  for (int attempt = 0; attempt < kGeneratorMaxRestarts; ++attempt) {
    std::vector<Edge> edges = strategy == RegularStrategy::EdgeAddition
                                  ? edge_addition_attempt(n, k, rng)
                                  : pairing_attempt(n, k, rng);
    if (edges.empty() && n * k > 0) continue;
    Graph g = Graph::from_edge_list(n, edges);
    g.check_invariants();
    return g;
  }
  fail(Errc::generation_failed,
       "no " + std::to_string(k) + "-regular graph on " + std::to_string(n) +
           " vertices after " + std::to_string(kGeneratorMaxRestarts) +
           " restarts");
}

int average_degree_edge_count(int n, double d) {
  if (n < 0 || d < 0) fail(Errc::bad_config, "n and d must be nonnegative");
  const double dn = d * n;
  const double rounded = std::round(dn);
  if (std::abs(dn - rounded) > 1e-9 ||
      static_cast<long long>(rounded) % 2 != 0)
    fail(Errc::odd_handshake,
         "d*n must be an even integer, got d*n=" + std::to_string(dn));
  const long long m = static_cast<long long>(rounded) / 2;
  const long long max_edges = static_cast<long long>(n) * (n - 1) / 2;
  if (m > max_edges)
    fail(Errc::too_many_edges, std::to_string(m) + " edges exceed the " +
                                   std::to_string(max_edges) +
                                   " possible pairs");
  return static_cast<int>(m);
}

Graph random_average_degree(int n, double d, std::uint64_t seed) {
  const int m = average_degree_edge_count(n, d);
  std::vector<Edge> pairs;
  pairs.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) pairs.emplace_back(u, v);

  // Partial Fisher-Yates: the first m slots become a uniform m-subset.
  Rng rng(seed);
  for (int i = 0; i < m; ++i) {
    std::size_t j = i + rng.below(pairs.size() - i);
    std::swap(pairs[i], pairs[j]);
  }
  pairs.resize(m);
  Graph g = Graph::from_edge_list(n, pairs);
  g.check_invariants();
  return g;
}

Graph generate(const EnsembleKind& ensemble, int n, std::uint64_t seed,
               RegularStrategy strategy) {
  if (ensemble.kind == EnsembleKind::Kind::Regular)
    return random_regular(n, ensemble.k, seed, strategy);
  return random_average_degree(n, ensemble.avg, seed);
}

}  // namespace isk
