#include "isk/bdd.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace isk {

namespace {

constexpr NodeId kEmptySlot = ~NodeId{0};
constexpr std::size_t kInitialUnique = 1u << 10;
constexpr std::size_t kInitialMemo = 1u << 11;

inline std::uint64_t memo_hash(std::uint64_t x) {
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

BddStore::BddStore(int num_vars) : num_vars_(num_vars) {
  if (num_vars < 0) fail(Errc::bad_config, "num_vars must be nonnegative");
  const auto sentinel = static_cast<std::uint32_t>(num_vars_ + 1);
  nodes_.push_back({sentinel, bdd_false, bdd_false});  // FALSE sink
  nodes_.push_back({sentinel, bdd_true, bdd_true});    // TRUE sink
  unique_slots_.assign(kInitialUnique, {kEmptySlot, 0});
  unique_mask_ = kInitialUnique - 1;
  and_memo_.reset(kInitialMemo);
  or_memo_.reset(kInitialMemo);
  not_memo_.reset(kInitialMemo);
}

std::uint64_t BddStore::node_hash(std::uint32_t var, NodeId lo,
                                  NodeId hi) const {
  std::uint64_t h = var * 0x9e3779b97f4a7c15ULL;
  h ^= (static_cast<std::uint64_t>(lo) << 32 | hi) + (h << 6) + (h >> 2);
  h *= 0xbf58476d1ce4e5b9ULL;
  return h ^ (h >> 29);
}

void BddStore::unique_grow() {
  const std::size_t cap = (unique_mask_ + 1) * 2;
  std::vector<UniqueSlot> fresh(cap, {kEmptySlot, 0});
  const std::size_t mask = cap - 1;
  for (const UniqueSlot& slot : unique_slots_) {
    if (slot.id == kEmptySlot) continue;
    const Node& nd = nodes_[slot.id];
    std::size_t idx = node_hash(nd.var, nd.lo, nd.hi) & mask;
    while (fresh[idx].id != kEmptySlot) idx = (idx + 1) & mask;
    fresh[idx] = slot;
  }
  unique_slots_.swap(fresh);
  unique_mask_ = mask;
}

NodeId BddStore::make_node(int var, NodeId lo, NodeId hi) {
  if (lo == hi) return lo;  // redundant-test elimination
  if (var < 1 || var >= static_cast<int>(nodes_[lo].var) ||
      var >= static_cast<int>(nodes_[hi].var))
    fail(Errc::ordering_violation,
         "make_node(" + std::to_string(var) + ") must sit above both children");

  ++accesses_;  // unique-table probe
  const std::uint64_t h = node_hash(static_cast<std::uint32_t>(var), lo, hi);
  const auto fragment = static_cast<std::uint32_t>(h >> 32);
  std::size_t idx = h & unique_mask_;
  while (true) {
    const UniqueSlot slot = unique_slots_[idx];
    if (slot.id == kEmptySlot) break;
    if (slot.fragment == fragment) {
      const Node& nd = nodes_[slot.id];
      if (nd.var == static_cast<std::uint32_t>(var) && nd.lo == lo &&
          nd.hi == hi)
        return slot.id;
    }
    idx = (idx + 1) & unique_mask_;
  }

  ++accesses_;  // node append
  const NodeId id = static_cast<NodeId>(nodes_.size());
  if (id == kEmptySlot) fail(Errc::too_large, "node store overflow");
  nodes_.push_back({static_cast<std::uint32_t>(var), lo, hi});
  unique_slots_[idx] = {id, fragment};
  if (++unique_entries_ * 10 >= (unique_mask_ + 1) * 7) unique_grow();
  return id;
}

void BddStore::MemoTable::reset(std::size_t capacity_pow2) {
  entries.assign(capacity_pow2, {kEmpty, 0});
  mask = capacity_pow2 - 1;
  live = 0;
  live_limit = capacity_pow2 * 7 / 10;
}

void BddStore::MemoTable::grow() {
  std::vector<Entry> old;
  old.swap(entries);
  reset((mask + 1) * 2);
  for (const Entry& e : old) {
    if (e.key == kEmpty) continue;
    std::size_t idx = memo_hash(e.key) & mask;
    while (entries[idx].key != kEmpty) idx = (idx + 1) & mask;
    entries[idx] = e;
    ++live;
  }
}

bool BddStore::MemoTable::lookup(std::uint64_t key, NodeId& out) const {
  std::size_t idx = memo_hash(key) & mask;
  while (entries[idx].key != kEmpty) {
    if (entries[idx].key == key) {
      out = entries[idx].value;
      return true;
    }
    idx = (idx + 1) & mask;
  }
  return false;
}

void BddStore::MemoTable::insert(std::uint64_t key, NodeId value) {
  if (live >= live_limit) grow();
  std::size_t idx = memo_hash(key) & mask;
  while (entries[idx].key != kEmpty) {
    if (entries[idx].key == key) {
      entries[idx].value = value;
      return;
    }
    idx = (idx + 1) & mask;
  }
  entries[idx] = {key, value};
  ++live;
}

NodeId BddStore::apply_rec(BoolOp op, NodeId f, NodeId g) {
  if (op == BoolOp::And) {
    if (f == bdd_false || g == bdd_false) return bdd_false;
    if (f == bdd_true) return g;
    if (g == bdd_true) return f;
  } else {
    if (f == bdd_true || g == bdd_true) return bdd_true;
    if (f == bdd_false) return g;
    if (g == bdd_false) return f;
  }
  if (f == g) return f;

  if (f > g) std::swap(f, g);  // both ops are commutative
  MemoTable& memo = op == BoolOp::And ? and_memo_ : or_memo_;
  const std::uint64_t key = static_cast<std::uint64_t>(f) << 32 | g;
  ++accesses_;  // memo probe
  NodeId hit;
  if (memo.lookup(key, hit)) return hit;

  const Node nf = fetch(f);
  const Node ng = fetch(g);
  const std::uint32_t top = std::min(nf.var, ng.var);
  const NodeId f0 = nf.var == top ? nf.lo : f;
  const NodeId f1 = nf.var == top ? nf.hi : f;
  const NodeId g0 = ng.var == top ? ng.lo : g;
  const NodeId g1 = ng.var == top ? ng.hi : g;

  const NodeId lo = apply_rec(op, f0, g0);
  const NodeId hi = apply_rec(op, f1, g1);
  const NodeId result = make_node(static_cast<int>(top), lo, hi);

  ++accesses_;  // memo store
  memo.insert(key, result);
  return result;
}

NodeId BddStore::apply(BoolOp op, NodeId f, NodeId g) {
  return apply_rec(op, f, g);
}

NodeId BddStore::negate_rec(NodeId f) {
  if (f == bdd_false) return bdd_true;
  if (f == bdd_true) return bdd_false;

  ++accesses_;  // memo probe
  NodeId hit;
  if (not_memo_.lookup(f, hit)) return hit;

  const Node nf = fetch(f);
  const NodeId result = make_node(static_cast<int>(nf.var), negate_rec(nf.lo),
                                  negate_rec(nf.hi));
  ++accesses_;  // memo store
  not_memo_.insert(f, result);
  return result;
}

NodeId BddStore::negate(NodeId f) { return negate_rec(f); }

NodeId BddStore::import_rec(const BddStore& other, NodeId root,
                            std::vector<NodeId>& map) {
  if (root <= bdd_true) return root;
  if (map[root] != kEmptySlot) return map[root];
  const NodeId lo = import_rec(other, other.nodes_[root].lo, map);
  const NodeId hi = import_rec(other, other.nodes_[root].hi, map);
  const NodeId id =
      make_node(static_cast<int>(other.nodes_[root].var), lo, hi);
  map[root] = id;
  return id;
}

NodeId BddStore::import(const BddStore& other, NodeId root) {
  if (other.num_vars_ != num_vars_)
    fail(Errc::arity_mismatch, "import between stores with different num_vars");
  std::vector<NodeId> map(other.nodes_.size(), kEmptySlot);
  return import_rec(other, root, map);
}

void BddStore::mark_reachable(NodeId root,
                              std::vector<std::uint8_t>& mark) const {
  mark[bdd_false] = 1;
  mark[bdd_true] = 1;
  if (root <= bdd_true) return;
  std::vector<NodeId> stack{root};
  mark[root] = 1;
  while (!stack.empty()) {
    const NodeId id = stack.back();
    stack.pop_back();
    for (const NodeId child : {nodes_[id].lo, nodes_[id].hi}) {
      if (!mark[child]) {
        mark[child] = 1;
        stack.push_back(child);
      }
    }
  }
}

mpz_class BddStore::count_solutions(NodeId root) const {
  std::vector<std::uint8_t> mark(nodes_.size(), 0);
  mark_reachable(root, mark);

  std::vector<std::uint32_t> slot(nodes_.size(), 0);
  std::size_t live = 0;
  for (std::size_t k = 0; k < nodes_.size(); ++k)
    if (mark[k]) slot[k] = static_cast<std::uint32_t>(live++);

  std::vector<mpz_class> c(live);
  c[slot[bdd_false]] = 0;
  c[slot[bdd_true]] = 1;
  mpz_class part;
  for (std::size_t k = 2; k < nodes_.size(); ++k) {
    if (!mark[k]) continue;
    const Node& nd = nodes_[k];
    if (nd.lo >= k || nd.hi >= k)
      fail(Errc::unordered_store, "child after parent in store order");
    const unsigned wl = nodes_[nd.lo].var - nd.var - 1;
    const unsigned wh = nodes_[nd.hi].var - nd.var - 1;
    mpz_class& ck = c[slot[k]];
    mpz_mul_2exp(ck.get_mpz_t(), c[slot[nd.lo]].get_mpz_t(), wl);
    mpz_mul_2exp(part.get_mpz_t(), c[slot[nd.hi]].get_mpz_t(), wh);
    ck += part;
  }

  mpz_class answer;
  mpz_mul_2exp(answer.get_mpz_t(), c[slot[root]].get_mpz_t(),
               nodes_[root].var - 1);
  return answer;
}

std::size_t BddStore::node_count(NodeId root) const {
  std::vector<std::uint8_t> mark(nodes_.size(), 0);
  mark_reachable(root, mark);
  std::size_t branch = 0;
  for (std::size_t k = 2; k < nodes_.size(); ++k)
    if (mark[k]) ++branch;
  return branch + 2;  // both sinks count once each
}

bool BddStore::evaluate(NodeId root, std::uint64_t assignment) const {
  NodeId id = root;
  while (id > bdd_true) {
    const Node& nd = nodes_[id];
    id = (assignment >> (nd.var - 1)) & 1 ? nd.hi : nd.lo;
  }
  return id == bdd_true;
}

std::string BddStore::dump(NodeId root) const {
  std::vector<std::uint8_t> mark(nodes_.size(), 0);
  mark_reachable(root, mark);
  std::vector<std::uint32_t> renum(nodes_.size(), 0);
  renum[bdd_false] = 0;
  renum[bdd_true] = 1;
  std::uint32_t next = 2;
  for (std::size_t k = 2; k < nodes_.size(); ++k)
    if (mark[k]) renum[k] = next++;

  std::ostringstream out;
  for (std::size_t k = 2; k < nodes_.size(); ++k) {
    if (!mark[k]) continue;
    const Node& nd = nodes_[k];
    out << renum[k] << ": " << nd.var << ' ' << renum[nd.lo] << ' '
        << renum[nd.hi] << '\n';
  }
  out << "root " << renum[root] << '\n';
  return out.str();
}

Bdd make_constant(const std::shared_ptr<BddStore>& store, bool value) {
  return Bdd(store, value ? bdd_true : bdd_false);
}

Bdd make_variable(const std::shared_ptr<BddStore>& store, int i) {
  if (i < 1 || i > store->num_vars())
    fail(Errc::variable_out_of_range,
         "variable " + std::to_string(i) + " out of range 1.." +
             std::to_string(store->num_vars()));
  return Bdd(store, store->make_node(i, bdd_false, bdd_true));
}

Bdd constant(bool value, int num_vars) {
  return make_constant(std::make_shared<BddStore>(num_vars), value);
}

Bdd variable(int i, int num_vars) {
  return make_variable(std::make_shared<BddStore>(num_vars), i);
}

Bdd apply(BoolOp op, const Bdd& f, const Bdd& g) {
  if (f.num_vars() != g.num_vars())
    fail(Errc::arity_mismatch,
         "operands disagree on num_vars: " + std::to_string(f.num_vars()) +
             " vs " + std::to_string(g.num_vars()));
  NodeId g_root = g.root();
  if (f.store_ptr() != g.store_ptr())
    g_root = f.store().import(g.store(), g.root());
  return Bdd(f.store_ptr(), f.store().apply(op, f.root(), g_root));
}

Bdd negate(const Bdd& f) {
  return Bdd(f.store_ptr(), f.store().negate(f.root()));
}

double ln_count(const mpz_class& z) {
  if (z <= 0) fail(Errc::bad_config, "ln of a nonpositive count");
  signed long exp2;
  const double mantissa = mpz_get_d_2exp(&exp2, z.get_mpz_t());
  return std::log(mantissa) + static_cast<double>(exp2) * M_LN2;
}

}  // namespace isk
