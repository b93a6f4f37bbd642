#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "dpf/node_id.hpp"

namespace dpf {

enum class Errc {
  invalid_node,
  dead_node,
  not_a_root,
  same_tree,
  is_root,
  depth_out_of_range,
  different_trees,
  has_children,
  has_incoming_edges,
  not_self_loop,
  missing_edge,
};

std::string_view errc_name(Errc code);

/// Precondition violation raised by every structure in this library.
///
/// The message is a pure function of the code and the offending ids so that
/// the engine and the oracle report identical text for the same violation.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

namespace errors {

Error invalid_node(std::uint64_t id);
Error dead_node(NodeId v);
Error has_incoming_edges(NodeId v);
Error not_self_loop(NodeId v);
Error missing_edge(NodeId v, NodeId w);

}  // namespace errors

}  // namespace dpf
