#include "dpf/error.hpp"

#include <string>

namespace dpf {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::invalid_node: return "invalid_node";
    case Errc::dead_node: return "dead_node";
    case Errc::not_a_root: return "not_a_root";
    case Errc::same_tree: return "same_tree";
    case Errc::is_root: return "is_root";
    case Errc::depth_out_of_range: return "depth_out_of_range";
    case Errc::different_trees: return "different_trees";
    case Errc::has_children: return "has_children";
    case Errc::has_incoming_edges: return "has_incoming_edges";
    case Errc::not_self_loop: return "not_self_loop";
    case Errc::missing_edge: return "missing_edge";
  }
  return "unknown";
}

namespace errors {

Error invalid_node(std::uint64_t id) {
  return Error(Errc::invalid_node, "invalid node " + std::to_string(id));
}

Error dead_node(NodeId v) {
  return Error(Errc::dead_node, "dead node " + std::to_string(v.value));
}

Error has_incoming_edges(NodeId v) {
  return Error(Errc::has_incoming_edges,
               "node " + std::to_string(v.value) + " has incoming edges");
}

Error not_self_loop(NodeId v) {
  return Error(Errc::not_self_loop,
               "node " + std::to_string(v.value) + " already has an outgoing edge");
}

Error missing_edge(NodeId v, NodeId w) {
  return Error(Errc::missing_edge, "no edge " + std::to_string(v.value) + " -> " +
                                       std::to_string(w.value));
}

}  // namespace errors

}  // namespace dpf
