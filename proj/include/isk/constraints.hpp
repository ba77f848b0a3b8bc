#pragma once

#include <string>

#include "isk/bdd.hpp"
#include "isk/graph.hpp"

namespace isk {

enum class ConstraintMode { IndependentSet, Kernel };

const char* mode_name(ConstraintMode mode);  // "is" / "kernel"
ConstraintMode mode_from_name(const std::string& name);

// Bdd over n variables whose solutions are exactly the independent sets of
// g: AND over edges {u,v} (lexicographic order) of NOT(x_u AND x_v).
// Each invocation owns a fresh store.
Bdd independent_set_bdd(const Graph& g);

// Bdd whose solutions are the kernels (maximal independent sets) of g:
// AND over vertices v (ascending) of the local condition
//   x_v = 1  ->  all neighbors 0
//   x_v = 0  ->  at least one neighbor 1
// which is x_v <-> (all neighbors 0). An isolated vertex is forced to 1.
Bdd kernel_bdd(const Graph& g);

Bdd constraint_bdd(const Graph& g, ConstraintMode mode);

}  // namespace isk
