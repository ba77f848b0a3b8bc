#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "isk/error.hpp"

namespace isk {

using NodeId = std::uint32_t;

inline constexpr NodeId bdd_false = 0;
inline constexpr NodeId bdd_true = 1;

enum class BoolOp { And, Or };

// Reduced ordered BDD node store over variables 1..num_vars, with the two
// sinks at ids 0 (FALSE) and 1 (TRUE) carrying the sentinel variable
// num_vars+1. Nodes are append-only and make_node can only reference
// existing ids, so store order is children-before-parents throughout.
//
// The access counter is the complexity proxy for a build: it ticks on every
// node fetch, unique-table probe, memo-table probe and node append made by
// the construction operations. Post-build queries (count_solutions,
// node_count, dump) leave it untouched.
//
// A store and its tables are confined to one thread at a time; distinct
// stores run in parallel freely.
class BddStore {
 public:
  explicit BddStore(int num_vars);

  int num_vars() const { return num_vars_; }
  int sentinel_var() const { return num_vars_ + 1; }

  // Applies the reduction rules: returns lo when lo == hi, otherwise the
  // unique id for (var, lo, hi), appending a fresh node only when the
  // triple is new. Requires var < var(lo) and var < var(hi).
  NodeId make_node(int var, NodeId lo, NodeId hi);

  NodeId apply(BoolOp op, NodeId f, NodeId g);
  NodeId negate(NodeId f);

  // Copies the function rooted at `root` of `other` into this store.
  // Stores must agree on num_vars.
  NodeId import(const BddStore& other, NodeId root);

  int var(NodeId id) const { return static_cast<int>(nodes_[id].var); }
  NodeId lo(NodeId id) const { return nodes_[id].lo; }
  NodeId hi(NodeId id) const { return nodes_[id].hi; }
  bool is_sink(NodeId id) const { return id <= bdd_true; }

  // Store size including dead nodes left behind by intermediate results.
  std::size_t size() const { return nodes_.size(); }

  // Exact number of satisfying assignments over all num_vars variables.
  // Walks the reachable nodes in store order (children first), combining
  // child counts weighted by the variables skipped along each branch.
  mpz_class count_solutions(NodeId root) const;

  // Nodes reachable from root, with both sinks always counted once each.
  std::size_t node_count(NodeId root) const;

  // Evaluates the function: bit v-1 of `assignment` is the value of x_v.
  bool evaluate(NodeId root, std::uint64_t assignment) const;

  // Textual listing "k: var lo hi" of the reachable branch nodes in store
  // order, renumbered to 0..s-1 with the sinks at 0 and 1; the final line
  // is "root <k>".
  std::string dump(NodeId root) const;

  std::uint64_t access_count() const { return accesses_; }
  void reset_access_count() { accesses_ = 0; }

 private:
  struct Node {
    std::uint32_t var;
    NodeId lo;
    NodeId hi;
  };

  // Open-addressed map from (f,g) pairs (or single ids) to result ids.
  // Entries stay valid for the lifetime of the store (ids are canonical),
  // so memos persist across operations and are dropped with the store
  // between graph builds. Key and value live side by side: one cache line
  // per probe.
  struct MemoTable {
    struct Entry {
      std::uint64_t key;
      NodeId value;
    };

    std::vector<Entry> entries;
    std::size_t mask = 0;
    std::size_t live = 0;
    std::size_t live_limit = 0;

    static constexpr std::uint64_t kEmpty = ~0ULL;

    void reset(std::size_t capacity_pow2);
    void grow();
    bool lookup(std::uint64_t key, NodeId& out) const;
    void insert(std::uint64_t key, NodeId value);
  };

  // Unique-table slot: node id plus a hash fragment so most probes resolve
  // without touching the node store.
  struct UniqueSlot {
    NodeId id;
    std::uint32_t fragment;
  };

  NodeId apply_rec(BoolOp op, NodeId f, NodeId g);
  NodeId negate_rec(NodeId f);
  NodeId import_rec(const BddStore& other, NodeId root,
                    std::vector<NodeId>& map);

  Node fetch(NodeId id) {
    ++accesses_;
    return nodes_[id];
  }

  std::uint64_t node_hash(std::uint32_t var, NodeId lo, NodeId hi) const;
  void unique_grow();
  void mark_reachable(NodeId root, std::vector<std::uint8_t>& mark) const;

  int num_vars_;
  std::vector<Node> nodes_;

  std::vector<UniqueSlot> unique_slots_;
  std::size_t unique_mask_ = 0;
  std::size_t unique_entries_ = 0;

  MemoTable and_memo_;
  MemoTable or_memo_;
  MemoTable not_memo_;

  std::uint64_t accesses_ = 0;
};

// Value handle: shared store plus root id. Cheap to copy; a finished Bdd is
// immutable and safe to read from many threads.
class Bdd {
 public:
  Bdd() = default;
  Bdd(std::shared_ptr<BddStore> store, NodeId root)
      : store_(std::move(store)), root_(root) {}

  bool valid() const { return static_cast<bool>(store_); }
  int num_vars() const { return store_->num_vars(); }
  NodeId root() const { return root_; }
  BddStore& store() const { return *store_; }
  const std::shared_ptr<BddStore>& store_ptr() const { return store_; }

  mpz_class count_solutions() const { return store_->count_solutions(root_); }
  std::size_t node_count() const { return store_->node_count(root_); }
  bool evaluate(std::uint64_t assignment) const {
    return store_->evaluate(root_, assignment);
  }
  std::string dump() const { return store_->dump(root_); }

 private:
  std::shared_ptr<BddStore> store_;
  NodeId root_ = bdd_false;
};

// Constructors bound to an existing store (the usual path when composing
// many functions over the same variables).
Bdd make_constant(const std::shared_ptr<BddStore>& store, bool value);
Bdd make_variable(const std::shared_ptr<BddStore>& store, int i);

// Convenience constructors that mint a fresh store.
Bdd constant(bool value, int num_vars);
Bdd variable(int i, int num_vars);

// Reduced Bdd for op(f,g). Requires matching num_vars; when the operands
// live in different stores, g is imported into f's store first.
Bdd apply(BoolOp op, const Bdd& f, const Bdd& g);
Bdd negate(const Bdd& f);

inline Bdd operator&(const Bdd& a, const Bdd& b) {
  return apply(BoolOp::And, a, b);
}
inline Bdd operator|(const Bdd& a, const Bdd& b) {
  return apply(BoolOp::Or, a, b);
}
inline Bdd operator!(const Bdd& a) { return negate(a); }

// ln of a positive arbitrary-precision count, relative error well under
// 1e-12 (mantissa + exponent decomposition).
double ln_count(const mpz_class& z);

}  // namespace isk
