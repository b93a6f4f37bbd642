#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "dpf/huge_page_allocator.hpp"
#include "dpf/node_id.hpp"

namespace dpf {

struct AccessOutcome {
  // Represented-tree node where the last preferred-child change happened.
  // Equals the accessed node when it already lay on the root's preferred path.
  NodeId last_switch;
};

/// Link-cut tree over a growable universe of node ids.
///
/// Each preferred path is a splay tree ordered by depth (shallowest leftmost).
/// Depths are never stored; they are recovered as order statistics from the
/// per-node subtree counts. There is no evert: the represented root of a tree
/// only changes through cut and link.
///
/// Every query splays, so even read-only operations mutate internal state.
/// Not thread-safe.
class LctForest {
 public:
  explicit LctForest(std::size_t n = 0);

  std::size_t universe_size() const { return nodes_.size(); }
  bool is_live(NodeId v) const {
    return v.index() < nodes_.size() && nodes_[v.index()].count != 0;
  }

  /// Appends a fresh singleton root and returns its id.
  NodeId add_node();
  /// Tombstones a childless represented root. The id is never handed out again.
  void retire(NodeId v);

  AccessOutcome access(NodeId v);

  /// Makes `parent` the represented parent of the root `child`.
  void link(NodeId child, NodeId parent);
  /// link() without the same-tree check. The caller has already established
  /// that `child` is a root and `parent` lies in another tree.
  void link_unchecked(NodeId child, NodeId parent);
  /// Detaches `child` from its represented parent and returns that parent.
  NodeId cut(NodeId child);

  NodeId find_root(NodeId v);
  bool is_root(NodeId v);
  std::optional<NodeId> parent(NodeId v);
  std::size_t depth(NodeId v);
  NodeId level_ancestor(NodeId v, std::size_t d);
  NodeId lca(NodeId x, NodeId y);
  /// Whether `a` lies on the path from `d` up to its root (a == d included).
  bool is_ancestor(NodeId a, NodeId d);

  /// Number of represented children of v. O(1).
  std::size_t child_count(NodeId v) const {
    check_live(v);
    return children_[v.index()];
  }

  std::uint64_t rotations() const { return rotations_; }

  /// Represented parent of every slot (nullopt for roots and tombstones).
  /// Read-only walk over the splay forest; O(n).
  std::vector<std::optional<NodeId>> export_parents() const;
  /// In-order listing of the splay tree currently holding `v`.
  std::vector<NodeId> splay_inorder(NodeId v) const;

 private:
  using Index = std::uint32_t;
  static constexpr Index kNil = UINT32_MAX;

  struct Node {
    Index left = kNil;
    Index right = kNil;
    // Splay parent when this node is a child of `up`, path-parent when it is
    // the root of its splay tree.
    Index up = kNil;
    std::uint32_t count = 1;  // 0 marks a tombstone
  };

  void check_live(NodeId v) const;
  bool is_splay_root(Index x) const;
  std::uint32_t count(Index x) const { return x == kNil ? 0 : nodes_[x].count; }
  void pull(Index x);
  void rotate(Index x);
  void splay(Index x);
  Index access_index(Index v);
  Index splay_root_of(Index x) const;

  std::vector<Node, HugePageAllocator<Node>> nodes_;
  std::vector<std::uint32_t, HugePageAllocator<std::uint32_t>> children_;
  std::uint64_t rotations_ = 0;
};

}  // namespace dpf
