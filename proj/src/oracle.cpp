#include "isk/oracle.hpp"

#include <algorithm>
#include <cstdint>

namespace isk {

namespace {

std::vector<std::uint32_t> neighbor_masks(const Graph& g) {
  std::vector<std::uint32_t> nbr(g.num_vertices(), 0);
  for (const auto& [u, v] : g.edges()) {
    nbr[u - 1] |= 1u << (v - 1);
    nbr[v - 1] |= 1u << (u - 1);
  }
  return nbr;
}

// Subset encoded with bit v-1 for vertex v.
inline bool accepts(std::uint32_t subset, const std::vector<std::uint32_t>& nbr,
                    int n, ConstraintMode mode) {
  for (int v = 0; v < n; ++v) {
    if (subset >> v & 1u) {
      if (nbr[v] & subset) return false;  // selected neighbor: not independent
    } else if (mode == ConstraintMode::Kernel) {
      if (!(nbr[v] & subset)) return false;  // not dominated: not maximal
    }
  }
  return true;
}

void check_size(const Graph& g, int limit, const char* what) {
  if (g.num_vertices() > limit)
    fail(Errc::too_large, std::string(what) + " limited to n <= " +
                              std::to_string(limit) + ", got n = " +
                              std::to_string(g.num_vertices()));
}

}  // namespace

mpz_class brute_count(const Graph& g, ConstraintMode mode) {
  check_size(g, kBruteCountMaxVertices, "brute_count");
  const int n = g.num_vertices();
  const auto nbr = neighbor_masks(g);
  const std::uint64_t total = 1ull << n;
  long count = 0;
  for (std::uint64_t subset = 0; subset < total; ++subset)
    if (accepts(static_cast<std::uint32_t>(subset), nbr, n, mode)) ++count;
  return mpz_class(count);
}

mpz_class brute_count_parallel(const Graph& g, ConstraintMode mode,
                               int threads) {
  check_size(g, kBruteCountMaxVertices, "brute_count");
  if (threads < 1) threads = 1;
  const int n = g.num_vertices();
  const auto nbr = neighbor_masks(g);
  const long long total = 1ll << n;
  long count = 0;
#pragma omp parallel for reduction(+ : count) num_threads(threads) \
    schedule(static)
  for (long long subset = 0; subset < total; ++subset)
    if (accepts(static_cast<std::uint32_t>(subset), nbr, n, mode)) ++count;
  return mpz_class(count);
}

std::vector<std::vector<int>> enumerate_sets(const Graph& g,
                                             ConstraintMode mode) {
  check_size(g, kEnumerateMaxVertices, "enumerate_sets");
  const int n = g.num_vertices();
  const auto nbr = neighbor_masks(g);
  std::vector<std::vector<int>> sets;
  for (std::uint64_t subset = 0; subset < (1ull << n); ++subset) {
    if (!accepts(static_cast<std::uint32_t>(subset), nbr, n, mode)) continue;
    std::vector<int> vertices;
    for (int v = 0; v < n; ++v)
      if (subset >> v & 1u) vertices.push_back(v + 1);
    sets.push_back(std::move(vertices));
  }
  std::sort(sets.begin(), sets.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return sets;
}

}  // namespace isk
