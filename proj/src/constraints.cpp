#include "isk/constraints.hpp"

#include <memory>

namespace isk {

const char* mode_name(ConstraintMode mode) {
  return mode == ConstraintMode::IndependentSet ? "is" : "kernel";
}

ConstraintMode mode_from_name(const std::string& name) {
  if (name == "is") return ConstraintMode::IndependentSet;
  if (name == "kernel") return ConstraintMode::Kernel;
  fail(Errc::bad_config, "unknown constraint mode: " + name);
}

namespace {

// NOT(x_u AND x_v) for u < v, built bottom-up: two nodes, no apply garbage.
NodeId edge_constraint(BddStore& store, int u, int v) {
  const NodeId not_v = store.make_node(v, bdd_true, bdd_false);
  return store.make_node(u, bdd_true, not_v);
}

// Local kernel condition for v: x_v <-> (all neighbors of v are 0).
// Built directly over the sorted support {v} union N(v) by tracking the one
// bit of state that matters above v: whether some neighbor is already 1.
NodeId kernel_local(BddStore& store, const Graph& g, int v) {
  const auto& nbr = g.neighbors(v);  // sorted ascending

  // Chains over the neighbors above v, built bottom-up.
  NodeId all_zero = bdd_true;   // every later neighbor is 0
  NodeId some_one = bdd_false;  // at least one later neighbor is 1
  for (auto it = nbr.rbegin(); it != nbr.rend() && *it > v; ++it) {
    all_zero = store.make_node(*it, all_zero, bdd_false);
    some_one = store.make_node(*it, some_one, bdd_true);
  }

  // At v with no neighbor set yet: x_v = 1 demands all-zero below,
  // x_v = 0 demands some-one below.
  NodeId no_one_seen = store.make_node(v, some_one, all_zero);

  // Neighbors below v flip the state: once a neighbor is 1, x_v must be 0
  // and the condition is settled.
  const bool has_below = !nbr.empty() && nbr.front() < v;
  if (has_below) {
    const NodeId one_seen = store.make_node(v, bdd_true, bdd_false);
    for (auto it = nbr.rbegin(); it != nbr.rend(); ++it) {
      if (*it > v) continue;
      no_one_seen = store.make_node(*it, no_one_seen, one_seen);
    }
  }
  return no_one_seen;
}

}  // namespace

Bdd independent_set_bdd(const Graph& g) {
  auto store = std::make_shared<BddStore>(g.num_vertices());
  NodeId acc = bdd_true;
  for (const auto& [u, v] : g.edges())  // ascending edge order
    acc = store->apply(BoolOp::And, acc, edge_constraint(*store, u, v));
  return Bdd(store, acc);
}

Bdd kernel_bdd(const Graph& g) {
  auto store = std::make_shared<BddStore>(g.num_vertices());
  NodeId acc = bdd_true;
  for (int v = 1; v <= g.num_vertices(); ++v)  // ascending vertex order
    acc = store->apply(BoolOp::And, acc, kernel_local(*store, g, v));
  return Bdd(store, acc);
}

Bdd constraint_bdd(const Graph& g, ConstraintMode mode) {
  return mode == ConstraintMode::IndependentSet ? independent_set_bdd(g)
                                                : kernel_bdd(g);
}

}  // namespace isk
