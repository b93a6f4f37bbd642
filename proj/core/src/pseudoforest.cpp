#include "dpf/pseudoforest.hpp"

#include "dpf/error.hpp"

namespace dpf {

Pseudoforest::Pseudoforest(std::size_t n)
    : forest_(n), side_(n), indegree_(n, 1), live_count_(n) {
  for (std::size_t i = 0; i < n; ++i) side_[i] = static_cast<std::uint32_t>(i);
}

void Pseudoforest::check_live(NodeId v) const {
  if (v.index() >= side_.size()) throw errors::invalid_node(v.value);
  if (!forest_.is_live(v)) throw errors::dead_node(v);
}

NodeId Pseudoforest::succ_unchecked(NodeId v) {
  if (is_component_root(v)) return side(v);
  return *forest_.parent(v);
}

NodeId Pseudoforest::succ(NodeId v) {
  ++operations_;
  check_live(v);
  return succ_unchecked(v);
}

bool Pseudoforest::on_cycle_unchecked(NodeId v, NodeId root) {
  return v == root || forest_.is_ancestor(v, side(root));
}

void Pseudoforest::update_unchecked(NodeId v, NodeId w) {
  NodeId old;

  // Detach v's current edge so that v ends up a represented root.
  if (forest_.is_root(v)) {
    old = side(v);
    side_[v.index()] = kNone;
  } else {
    const NodeId r = forest_.find_root(v);
    const NodeId b = side(r);
    const bool cycle_edge = forest_.is_ancestor(v, b);
    old = forest_.cut(v);
    if (cycle_edge) {
      // r lost its path to the cycle; hang it under its own successor, which
      // now sits in v's subtree.
      side_[r.index()] = kNone;
      forest_.link_unchecked(r, b);
    }
  }

  --indegree_[old.index()];
  ++indegree_[w.index()];

  // Attach. If w already reaches v, the new edge closes a cycle through v.
  if (forest_.find_root(w) == v) {
    side_[v.index()] = w.value;
  } else {
    forest_.link_unchecked(v, w);
  }
}

void Pseudoforest::update(NodeId v, NodeId w) {
  ++operations_;
  check_live(v);
  check_live(w);
  update_unchecked(v, w);
}

NodeId Pseudoforest::query(NodeId v, std::uint64_t k) {
  ++operations_;
  check_live(v);
  const std::size_t d = forest_.depth(v);
  if (k <= d) return forest_.level_ancestor(v, d - k);
  const NodeId r = forest_.find_root(v);
  const NodeId b = side(r);
  const std::size_t db = forest_.depth(b);
  const std::uint64_t cycle = db + 1;
  const std::uint64_t m = (k - d) % cycle;
  if (m == 0) return r;
  return forest_.level_ancestor(b, db - (m - 1));
}

std::uint64_t Pseudoforest::cycle_length(NodeId v) {
  ++operations_;
  check_live(v);
  const NodeId r = forest_.find_root(v);
  return forest_.depth(side(r)) + 1;
}

bool Pseudoforest::on_cycle(NodeId v) {
  ++operations_;
  check_live(v);
  return on_cycle_unchecked(v, forest_.find_root(v));
}

std::optional<std::uint64_t> Pseudoforest::inverse_query(NodeId x, NodeId y) {
  ++operations_;
  check_live(x);
  check_live(y);
  const NodeId r = forest_.find_root(x);
  if (forest_.find_root(y) != r) return std::nullopt;
  if (forest_.is_ancestor(y, x)) return forest_.depth(x) - forest_.depth(y);
  if (!on_cycle_unchecked(y, r)) return std::nullopt;
  const std::size_t dx = forest_.depth(x);
  if (y == r) return dx;
  return dx + (forest_.depth(side(r)) - forest_.depth(y) + 1);
}

std::optional<NodeId> Pseudoforest::lca(NodeId x, NodeId y) {
  ++operations_;
  check_live(x);
  check_live(y);
  if (forest_.find_root(x) != forest_.find_root(y)) return std::nullopt;
  return forest_.lca(x, y);
}

std::uint64_t Pseudoforest::cycle_proximity(NodeId v) {
  ++operations_;
  check_live(v);
  const NodeId b = side(forest_.find_root(v));
  const NodeId entry = forest_.lca(v, b);
  return forest_.depth(v) - forest_.depth(entry);
}

void Pseudoforest::remove(NodeId v) {
  ++operations_;
  check_live(v);
  if (indegree_[v.index()] != 0) throw errors::has_incoming_edges(v);
  // No incoming edges means v is off-cycle, hence a represented leaf.
  --indegree_[forest_.cut(v).index()];
  forest_.retire(v);
  --live_count_;
}

NodeId Pseudoforest::subdivide(NodeId x) {
  ++operations_;
  check_live(x);
  const NodeId target = succ_unchecked(x);
  const NodeId y = forest_.add_node();
  side_.push_back(y.value);
  indegree_.push_back(1);
  ++live_count_;
  update_unchecked(y, target);
  update_unchecked(x, y);
  return y;
}

NodeId Pseudoforest::component_root(NodeId v) {
  ++operations_;
  check_live(v);
  return forest_.find_root(v);
}

std::size_t Pseudoforest::depth(NodeId v) {
  ++operations_;
  check_live(v);
  return forest_.depth(v);
}

std::size_t Pseudoforest::indegree(NodeId v) const {
  check_live(v);
  return indegree_[v.index()];
}

std::optional<NodeId> Pseudoforest::side_edge(NodeId r) const {
  check_live(r);
  if (!is_component_root(r)) return std::nullopt;
  return side(r);
}

std::vector<std::optional<NodeId>> Pseudoforest::export_successors() const {
  auto succ = forest_.export_parents();
  for (std::size_t i = 0; i < succ.size(); ++i) {
    if (side_[i] != kNone && forest_.is_live(NodeId(static_cast<std::uint32_t>(i)))) {
      succ[i] = NodeId(side_[i]);
    }
  }
  return succ;
}

}  // namespace dpf
