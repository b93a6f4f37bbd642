#pragma once

#include <cstddef>

#include "dpf/node_id.hpp"
#include "dpf/pseudoforest.hpp"

namespace dpf {

/// Connectivity over a graph whose components are directed paths, answered
/// with a constant number of Pseudoforest operations per call.
///
/// A node without an outgoing edge is a self-loop in the engine, so every
/// path component becomes a tree hanging off its terminal's self-loop and
/// f^n(x) is that terminal for every x on the path.
///
/// Only the self-loop precondition of add_edge is checked. Edge sets that are
/// not disjoint paths (a cycle, a node with two in-edges) give unspecified
/// answers.
class PathConn {
 public:
  explicit PathConn(std::size_t n = 0) : engine_(n) {}

  void add_edge(NodeId v, NodeId w);
  void remove_edge(NodeId v, NodeId w);
  bool connected(NodeId x, NodeId y);

  Pseudoforest& engine() { return engine_; }
  const Pseudoforest& engine() const { return engine_; }

 private:
  Pseudoforest engine_;
};

}  // namespace dpf
