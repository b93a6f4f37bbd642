#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>

namespace dpf {

/// Dense 0-based node label. Ids are never reused once a node is deleted.
struct NodeId {
  std::uint32_t value = 0;

  constexpr NodeId() = default;
  constexpr explicit NodeId(std::uint32_t v) : value(v) {}

  constexpr std::size_t index() const { return value; }

  friend constexpr auto operator<=>(NodeId, NodeId) = default;
};

inline std::ostream& operator<<(std::ostream& os, NodeId v) {
  return os << v.value;
}

}  // namespace dpf

template <>
struct std::hash<dpf::NodeId> {
  std::size_t operator()(dpf::NodeId v) const noexcept {
    return std::hash<std::uint32_t>{}(v.value);
  }
};
