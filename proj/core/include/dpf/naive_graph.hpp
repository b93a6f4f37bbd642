#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "dpf/node_id.hpp"

namespace dpf {

/// Brute-force successor array mirroring the Pseudoforest surface.
///
/// Everything here is an array lookup or an explicit walk; it is the
/// reference the engine is diffed against. Copyable for snapshots.
class NaiveGraph {
 public:
  /// Cycle structure of every component, recomputed from scratch.
  struct Decomposition {
    // Each cycle listed in successor order, starting at its smallest id.
    std::vector<std::vector<NodeId>> cycles;
    // Per slot; meaningless for deleted ids.
    std::vector<std::uint32_t> cycle_of;
    std::vector<std::uint64_t> tail_distance;
    std::vector<NodeId> entry;  // first cycle node on the forward walk
  };

  explicit NaiveGraph(std::size_t n = 0);

  std::size_t universe_size() const { return succ_.size(); }
  std::size_t live_count() const { return live_count_; }
  bool is_live(NodeId v) const {
    return v.index() < succ_.size() && succ_[v.index()].has_value();
  }

  NodeId succ(NodeId v) const;
  void update(NodeId v, NodeId w);
  NodeId query(NodeId v, std::uint64_t k) const;
  /// Plain k-step walk without the modular shortcut.
  NodeId walk(NodeId v, std::uint64_t k) const;
  std::uint64_t cycle_length(NodeId v) const;
  bool on_cycle(NodeId v) const;
  std::optional<std::uint64_t> inverse_query(NodeId x, NodeId y) const;
  /// First node on x's walk that y's walk also reaches.
  std::optional<NodeId> lca(NodeId x, NodeId y) const;
  std::uint64_t cycle_proximity(NodeId v) const;
  void remove(NodeId v);
  NodeId subdivide(NodeId x);
  /// Smallest id on v's cycle (the oracle has no designated root).
  NodeId cycle_representative(NodeId v) const;
  std::size_t indegree(NodeId v) const;

  /// Connectivity in the undirected support of the non-self-loop edges.
  bool support_connected(NodeId x, NodeId y) const;

  Decomposition decompose() const;
  const std::vector<std::optional<NodeId>>& export_successors() const {
    return succ_;
  }

 private:
  void check_live(NodeId v) const;
  NodeId next(NodeId v) const { return *succ_[v.index()]; }
  // Steps from v to the first repeated node: (tail length, cycle length).
  std::pair<std::uint64_t, std::uint64_t> rho(NodeId v) const;

  std::vector<std::optional<NodeId>> succ_;
  std::size_t live_count_ = 0;
};

}  // namespace dpf
