#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dpf {

enum class OpKind : std::uint8_t {
  update,
  query,
  succ,
  cyclen,
  oncycle,
  inv,
  lca,
  prox,
  remove,  // "delete" in the text format
  subdivide,
  root,
  pc_add,
  pc_del,
  pc_conn,
};

inline constexpr std::size_t kOpKindCount = 14;

/// Keyword used in the text format ("delete" for OpKind::remove).
std::string_view op_name(OpKind kind);
std::optional<OpKind> op_from_name(std::string_view name);
std::size_t op_arity(OpKind kind);

struct Command {
  OpKind kind = OpKind::succ;
  std::array<std::uint64_t, 2> args{};
  std::size_t line = 0;  // 1-based source line, 0 when generated

  std::string to_string() const;
  friend bool operator==(const Command& a, const Command& b) {
    return a.kind == b.kind && a.args == b.args;
  }
};

struct Workload {
  std::uint64_t n = 0;
  std::vector<Command> ops;

  /// Serializes in the text format; parse_workload(to_text()) round-trips.
  std::string to_text() const;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Parses `n <count>` followed by one command per line. Blank lines and lines
/// starting with '#' are skipped.
Workload parse_workload(std::string_view text);

}  // namespace dpf
