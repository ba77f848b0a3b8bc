#pragma once

#include <gmpxx.h>

#include <vector>

#include "isk/constraints.hpp"
#include "isk/graph.hpp"

namespace isk {

inline constexpr int kBruteCountMaxVertices = 30;
inline constexpr int kEnumerateMaxVertices = 20;

// Exhaustive scan of all 2^n vertex subsets using per-vertex neighbor
// bitmasks. The serial loop is the reference the BDD pipeline is validated
// against; the parallel variant splits the subset range across OpenMP
// threads and must agree exactly.
mpz_class brute_count(const Graph& g, ConstraintMode mode);
mpz_class brute_count_parallel(const Graph& g, ConstraintMode mode,
                               int threads);

// The accepted sets themselves, sorted by size then lexicographically.
std::vector<std::vector<int>> enumerate_sets(const Graph& g,
                                             ConstraintMode mode);

}  // namespace isk
