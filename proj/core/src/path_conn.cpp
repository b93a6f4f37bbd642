#include "dpf/path_conn.hpp"

#include "dpf/error.hpp"

namespace dpf {

void PathConn::add_edge(NodeId v, NodeId w) {
  if (engine_.succ(v) != v) throw errors::not_self_loop(v);
  engine_.update(v, w);
}

void PathConn::remove_edge(NodeId v, NodeId w) {
  if (v == w || engine_.succ(v) != w) {
    // succ already validated v; w may still be out of range.
    if (w.index() >= engine_.universe_size()) throw errors::invalid_node(w.value);
    throw errors::missing_edge(v, w);
  }
  engine_.update(v, v);
}

bool PathConn::connected(NodeId x, NodeId y) {
  // Any k at least the longest path length lands on the terminal.
  const auto n = static_cast<std::uint64_t>(engine_.universe_size());
  return engine_.query(x, n) == engine_.query(y, n);
}

}  // namespace dpf
