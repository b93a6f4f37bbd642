#include "dpf/workload.hpp"

#include <charconv>
#include <sstream>

namespace dpf {
namespace {

constexpr std::array<std::string_view, kOpKindCount> kNames = {
    "update", "query",  "succ",      "cyclen", "oncycle", "inv",    "lca",
    "prox",   "delete", "subdivide", "root",   "pc_add",  "pc_del", "pc_conn",
};

constexpr std::array<std::size_t, kOpKindCount> kArity = {
    2, 2, 1, 1, 1, 2, 2, 1, 1, 1, 1, 2, 2, 2,
};

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

std::uint64_t parse_number(std::string_view token, std::size_t line) {
  std::uint64_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError(line, "expected a non-negative integer, got '" +
                               std::string(token) + "'");
  }
  return value;
}

}  // namespace

std::string_view op_name(OpKind kind) {
  return kNames[static_cast<std::size_t>(kind)];
}

std::optional<OpKind> op_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == name) return static_cast<OpKind>(i);
  }
  return std::nullopt;
}

std::size_t op_arity(OpKind kind) { return kArity[static_cast<std::size_t>(kind)]; }

std::string Command::to_string() const {
  std::string out(op_name(kind));
  for (std::size_t i = 0; i < op_arity(kind); ++i) {
    out += ' ';
    out += std::to_string(args[i]);
  }
  return out;
}

std::string Workload::to_text() const {
  std::string out = "n " + std::to_string(n) + "\n";
  for (const Command& c : ops) {
    out += c.to_string();
    out += '\n';
  }
  return out;
}

Workload parse_workload(std::string_view text) {
  Workload w;
  bool have_header = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    const auto tokens = split_tokens(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;

    if (!have_header) {
      if (tokens.front() != "n") throw ParseError(line_no, "missing header 'n <count>'");
      if (tokens.size() != 2) throw ParseError(line_no, "header takes exactly one count");
      w.n = parse_number(tokens[1], line_no);
      have_header = true;
      continue;
    }

    const auto kind = op_from_name(tokens.front());
    if (!kind) {
      throw ParseError(line_no, "unknown command '" + std::string(tokens.front()) + "'");
    }
    const std::size_t arity = op_arity(*kind);
    if (tokens.size() != arity + 1) {
      throw ParseError(line_no, "'" + std::string(tokens.front()) + "' takes " +
                                    std::to_string(arity) + " argument(s)");
    }
    Command c{.kind = *kind, .args = {}, .line = line_no};
    for (std::size_t i = 0; i < arity; ++i) c.args[i] = parse_number(tokens[i + 1], line_no);
    w.ops.push_back(c);
  }
  if (!have_header) throw ParseError(line_no == 0 ? 1 : line_no, "missing header 'n <count>'");
  return w;
}

}  // namespace dpf
