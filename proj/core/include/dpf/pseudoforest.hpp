#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "dpf/huge_page_allocator.hpp"
#include "dpf/lct.hpp"
#include "dpf/node_id.hpp"

namespace dpf {

/// Dynamic successor graph: every live node has exactly one outgoing edge.
///
/// Each weakly connected component is stored as one represented tree of an
/// LctForest whose root r lies on the component's cycle. The root's own
/// successor b = f(r) is kept outside the forest as a side edge; the cycle is
/// then r followed by the represented path from b up to r, so its length is
/// depth(b) + 1. All operations are O(lg n) amortized.
class Pseudoforest {
 public:
  /// n self-loops.
  explicit Pseudoforest(std::size_t n = 0);

  std::size_t universe_size() const { return forest_.universe_size(); }
  std::size_t live_count() const { return live_count_; }
  bool is_live(NodeId v) const { return forest_.is_live(v); }

  NodeId succ(NodeId v);
  /// Repoints v at w. update(v, v) makes v a self-loop.
  void update(NodeId v, NodeId w);
  /// f^k(v).
  NodeId query(NodeId v, std::uint64_t k);

  std::uint64_t cycle_length(NodeId v);
  bool on_cycle(NodeId v);
  /// Smallest k with f^k(x) = y.
  std::optional<std::uint64_t> inverse_query(NodeId x, NodeId y);
  /// Meet of the two forward walks. If it lies on the cycle the particular
  /// cycle node returned depends on the representation.
  std::optional<NodeId> lca(NodeId x, NodeId y);
  /// Number of steps before the walk from v enters the cycle.
  std::uint64_t cycle_proximity(NodeId v);
  /// Deletes a node with no incoming edges.
  void remove(NodeId v);
  /// Inserts a fresh node y on the edge x -> f(x) and returns it.
  NodeId subdivide(NodeId x);
  /// The designated cycle node that roots v's component.
  NodeId component_root(NodeId v);

  /// Depth of v below its component root in the representation.
  std::size_t depth(NodeId v);
  /// Number of u with f(u) = v.
  std::size_t indegree(NodeId v) const;
  /// f(r) when r is a component root, nullopt otherwise.
  std::optional<NodeId> side_edge(NodeId r) const;

  /// f(v) for every slot, nullopt for deleted ids. O(n), no splaying.
  std::vector<std::optional<NodeId>> export_successors() const;

  /// Public operations invoked so far.
  std::uint64_t operations() const { return operations_; }
  std::uint64_t rotations() const { return forest_.rotations(); }
  const LctForest& forest() const { return forest_; }

 private:
  static constexpr std::uint32_t kNone = UINT32_MAX;

  void check_live(NodeId v) const;
  bool is_component_root(NodeId v) const {
    return side_[v.index()] != kNone;
  }
  NodeId side(NodeId r) const { return NodeId(side_[r.index()]); }
  NodeId succ_unchecked(NodeId v);
  void update_unchecked(NodeId v, NodeId w);
  bool on_cycle_unchecked(NodeId v, NodeId root);

  LctForest forest_;
  std::vector<std::uint32_t, HugePageAllocator<std::uint32_t>> side_;
  std::vector<std::uint32_t, HugePageAllocator<std::uint32_t>> indegree_;
  std::size_t live_count_ = 0;
  std::uint64_t operations_ = 0;
};

}  // namespace dpf
