#include "dpf/lct.hpp"

#include <string>

#include "dpf/error.hpp"

namespace dpf {

LctForest::LctForest(std::size_t n)
    : nodes_(n), children_(n, 0) {}

NodeId LctForest::add_node() {
  nodes_.emplace_back();
  children_.push_back(0);
  return NodeId(static_cast<std::uint32_t>(nodes_.size() - 1));
}

void LctForest::check_live(NodeId v) const {
  if (v.index() >= nodes_.size()) throw errors::invalid_node(v.value);
  if (nodes_[v.index()].count == 0) throw errors::dead_node(v);
}

void LctForest::retire(NodeId v) {
  check_live(v);
  const Index x = v.value;
  access_index(x);
  if (nodes_[x].left != kNil) {
    throw Error(Errc::not_a_root,
                "node " + std::to_string(v.value) + " is not a root");
  }
  if (children_[x] != 0) {
    throw Error(Errc::has_children,
                "node " + std::to_string(v.value) + " has children");
  }
  nodes_[x].count = 0;
}

bool LctForest::is_splay_root(Index x) const {
  const Index p = nodes_[x].up;
  return p == kNil || (nodes_[p].left != x && nodes_[p].right != x);
}

void LctForest::pull(Index x) {
  Node& n = nodes_[x];
  n.count = 1 + count(n.left) + count(n.right);
}

void LctForest::rotate(Index x) {
  const Index p = nodes_[x].up;
  const Index g = nodes_[p].up;
  if (nodes_[p].left == x) {
    const Index b = nodes_[x].right;
    nodes_[p].left = b;
    if (b != kNil) nodes_[b].up = p;
    nodes_[x].right = p;
  } else {
    const Index b = nodes_[x].left;
    nodes_[p].right = b;
    if (b != kNil) nodes_[b].up = p;
    nodes_[x].left = p;
  }
  // When p was a splay root, g is its path-parent and x inherits it as such.
  if (g != kNil) {
    if (nodes_[g].left == p) {
      nodes_[g].left = x;
    } else if (nodes_[g].right == p) {
      nodes_[g].right = x;
    }
  }
  nodes_[x].up = g;
  nodes_[p].up = x;
  pull(p);
  pull(x);
  ++rotations_;
}

void LctForest::splay(Index x) {
  while (!is_splay_root(x)) {
    const Index p = nodes_[x].up;
    if (!is_splay_root(p)) {
      const Index g = nodes_[p].up;
      const bool zig_zig = (nodes_[g].left == p) == (nodes_[p].left == x);
      rotate(zig_zig ? p : x);
    }
    rotate(x);
  }
}

LctForest::Index LctForest::access_index(Index v) {
  Index last = kNil;
  for (Index y = v; y != kNil; y = nodes_[y].up) {
    splay(y);
    nodes_[y].right = last;
    pull(y);
    last = y;
  }
  splay(v);
  return last;
}

AccessOutcome LctForest::access(NodeId v) {
  check_live(v);
  return AccessOutcome{NodeId(access_index(v.value))};
}

void LctForest::link(NodeId child, NodeId parent) {
  check_live(child);
  check_live(parent);
  if (find_root(parent) == child) {
    throw Error(Errc::same_tree, "nodes " + std::to_string(child.value) +
                                     " and " + std::to_string(parent.value) +
                                     " are already connected");
  }
  const Index c = child.value;
  access_index(c);
  if (nodes_[c].left != kNil) {
    throw Error(Errc::not_a_root,
                "node " + std::to_string(child.value) + " is not a root");
  }
  // c is alone at the top of its preferred path, so a path-parent pointer is
  // enough to hang it under `parent`.
  nodes_[c].up = parent.value;
  ++children_[parent.index()];
}

void LctForest::link_unchecked(NodeId child, NodeId parent) {
  const Index c = child.value;
  access_index(c);
  nodes_[c].up = parent.value;
  ++children_[parent.index()];
}

NodeId LctForest::cut(NodeId child) {
  check_live(child);
  const Index c = child.value;
  access_index(c);
  const Index l = nodes_[c].left;
  if (l == kNil) {
    throw Error(Errc::is_root,
                "node " + std::to_string(child.value) + " is a root");
  }
  Index p = l;
  while (nodes_[p].right != kNil) p = nodes_[p].right;
  --children_[p];
  nodes_[l].up = kNil;
  nodes_[c].left = kNil;
  pull(c);
  splay(p);
  return NodeId(p);
}

NodeId LctForest::find_root(NodeId v) {
  check_live(v);
  Index x = v.value;
  access_index(x);
  while (nodes_[x].left != kNil) x = nodes_[x].left;
  splay(x);
  return NodeId(x);
}

bool LctForest::is_root(NodeId v) {
  check_live(v);
  access_index(v.value);
  return nodes_[v.index()].left == kNil;
}

std::optional<NodeId> LctForest::parent(NodeId v) {
  check_live(v);
  const Index x = v.value;
  access_index(x);
  Index p = nodes_[x].left;
  if (p == kNil) return std::nullopt;
  while (nodes_[p].right != kNil) p = nodes_[p].right;
  splay(p);
  return NodeId(p);
}

std::size_t LctForest::depth(NodeId v) {
  check_live(v);
  const Index x = v.value;
  access_index(x);
  return count(nodes_[x].left);
}

NodeId LctForest::level_ancestor(NodeId v, std::size_t d) {
  check_live(v);
  Index x = v.value;
  access_index(x);
  const std::size_t dv = count(nodes_[x].left);
  if (d > dv) {
    throw Error(Errc::depth_out_of_range,
                "depth " + std::to_string(d) + " exceeds depth of node " +
                    std::to_string(v.value));
  }
  // Order-statistic select: the node with exactly d in-order predecessors.
  std::size_t rank = d;
  for (;;) {
    const std::size_t left = count(nodes_[x].left);
    if (rank < left) {
      x = nodes_[x].left;
    } else if (rank == left) {
      break;
    } else {
      rank -= left + 1;
      x = nodes_[x].right;
    }
  }
  splay(x);
  return NodeId(x);
}

NodeId LctForest::lca(NodeId x, NodeId y) {
  if (find_root(x) != find_root(y)) {
    throw Error(Errc::different_trees, "nodes " + std::to_string(x.value) +
                                           " and " + std::to_string(y.value) +
                                           " are in different trees");
  }
  access_index(x.value);
  return NodeId(access_index(y.value));
}

bool LctForest::is_ancestor(NodeId a, NodeId d) {
  check_live(a);
  check_live(d);
  if (a == d) return true;
  // After access(d) the root path is one splay tree with d on top. Splaying a
  // within its own splay tree moves d down iff they share that tree.
  access_index(d.value);
  splay(a.value);
  return nodes_[d.index()].up != kNil;
}

LctForest::Index LctForest::splay_root_of(Index x) const {
  while (!is_splay_root(x)) x = nodes_[x].up;
  return x;
}

std::vector<std::optional<NodeId>> LctForest::export_parents() const {
  std::vector<std::optional<NodeId>> parents(nodes_.size());
  std::vector<Index> stack;
  for (Index r = 0; r < nodes_.size(); ++r) {
    if (nodes_[r].count == 0 || !is_splay_root(r)) continue;
    // In-order walk: each node's represented parent is its predecessor, the
    // first node's is the splay root's path-parent.
    Index prev = nodes_[r].up;
    Index x = r;
    while (x != kNil || !stack.empty()) {
      while (x != kNil) {
        stack.push_back(x);
        x = nodes_[x].left;
      }
      x = stack.back();
      stack.pop_back();
      if (prev != kNil) parents[x] = NodeId(prev);
      prev = x;
      x = nodes_[x].right;
    }
  }
  return parents;
}

std::vector<NodeId> LctForest::splay_inorder(NodeId v) const {
  check_live(v);
  std::vector<NodeId> out;
  std::vector<Index> stack;
  Index x = splay_root_of(v.value);
  while (x != kNil || !stack.empty()) {
    while (x != kNil) {
      stack.push_back(x);
      x = nodes_[x].left;
    }
    x = stack.back();
    stack.pop_back();
    out.emplace_back(x);
    x = nodes_[x].right;
  }
  return out;
}

}  // namespace dpf
