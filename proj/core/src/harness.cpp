#include "dpf/harness.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <utility>

#include "dpf/error.hpp"
#include "dpf/naive_graph.hpp"
#include "dpf/path_conn.hpp"
#include "dpf/rng.hpp"

namespace dpf {
namespace {

NodeId to_node(std::uint64_t id) {
  if (id > UINT32_MAX) throw errors::invalid_node(id);
  return NodeId(static_cast<std::uint32_t>(id));
}

bool takes_two_ids(OpKind kind) {
  return op_arity(kind) == 2 && kind != OpKind::query;
}

std::string show(NodeId v) { return std::to_string(v.value); }
std::string show(bool b) { return b ? "true" : "false"; }
std::string show(std::uint64_t k) { return std::to_string(k); }
template <typename T>
std::string show(const std::optional<T>& v) {
  return v ? show(*v) : std::string("none");
}

std::optional<NodeId> parse_id(const std::optional<std::string>& line) {
  if (!line || line->empty() || line->front() < '0' || line->front() > '9') {
    return std::nullopt;
  }
  return to_node(std::stoull(*line));
}

class EngineBackend final : public Backend {
 public:
  explicit EngineBackend(std::uint64_t n) : conn_(n) {}

  std::optional<std::string> execute(const Command& c) override {
    try {
      const NodeId a = to_node(c.args[0]);
      const NodeId b = takes_two_ids(c.kind) ? to_node(c.args[1]) : NodeId{};
      Pseudoforest& pf = conn_.engine();
      switch (c.kind) {
        case OpKind::update: pf.update(a, b); return std::nullopt;
        case OpKind::query: return show(pf.query(a, c.args[1]));
        case OpKind::succ: return show(pf.succ(a));
        case OpKind::cyclen: return show(pf.cycle_length(a));
        case OpKind::oncycle: return show(pf.on_cycle(a));
        case OpKind::inv: return show(pf.inverse_query(a, b));
        case OpKind::lca: return show(pf.lca(a, b));
        case OpKind::prox: return show(pf.cycle_proximity(a));
        case OpKind::remove: pf.remove(a); return std::nullopt;
        case OpKind::subdivide: return show(pf.subdivide(a));
        case OpKind::root: return show(pf.component_root(a));
        case OpKind::pc_add: conn_.add_edge(a, b); return std::nullopt;
        case OpKind::pc_del: conn_.remove_edge(a, b); return std::nullopt;
        case OpKind::pc_conn: return show(conn_.connected(a, b));
      }
    } catch (const Error& e) {
      return std::string("error ") + e.what();
    }
    return std::nullopt;
  }

 private:
  PathConn conn_;
};

// `root` prints the smallest id on the cycle, since the oracle has no
// designated root; `lca` prints the first meet of the two walks. Both are
// compared semantically against the engine in accepts().
class OracleBackend final : public Backend {
 public:
  explicit OracleBackend(std::uint64_t n) : graph_(n) {}

  std::optional<std::string> execute(const Command& c) override {
    try {
      const NodeId a = to_node(c.args[0]);
      const NodeId b = takes_two_ids(c.kind) ? to_node(c.args[1]) : NodeId{};
      switch (c.kind) {
        case OpKind::update: graph_.update(a, b); return std::nullopt;
        case OpKind::query: return show(graph_.query(a, c.args[1]));
        case OpKind::succ: return show(graph_.succ(a));
        case OpKind::cyclen: return show(graph_.cycle_length(a));
        case OpKind::oncycle: return show(graph_.on_cycle(a));
        case OpKind::inv: return show(graph_.inverse_query(a, b));
        case OpKind::lca: return show(graph_.lca(a, b));
        case OpKind::prox: return show(graph_.cycle_proximity(a));
        case OpKind::remove: graph_.remove(a); return std::nullopt;
        case OpKind::subdivide: return show(graph_.subdivide(a));
        case OpKind::root: return show(graph_.cycle_representative(a));
        case OpKind::pc_add:
          if (graph_.succ(a) != a) throw errors::not_self_loop(a);
          graph_.update(a, b);
          return std::nullopt;
        case OpKind::pc_del:
          if (a == b || graph_.succ(a) != b) {
            if (b.index() >= graph_.universe_size()) throw errors::invalid_node(b.value);
            throw errors::missing_edge(a, b);
          }
          graph_.update(a, a);
          return std::nullopt;
        case OpKind::pc_conn: return show(graph_.support_connected(a, b));
      }
    } catch (const Error& e) {
      return std::string("error ") + e.what();
    }
    return std::nullopt;
  }

  bool accepts(const Command& c, const std::optional<std::string>& mine,
               const std::optional<std::string>& engine) const override {
    if (mine == engine) return true;
    const auto expected = parse_id(mine);
    const auto got = parse_id(engine);
    if (!expected || !got || !graph_.is_live(*got)) return false;
    switch (c.kind) {
      case OpKind::root:
        return graph_.on_cycle(*got) && graph_.cycle_representative(*got) == *expected;
      case OpKind::lca:
        // Only a meet on the cycle is ambiguous.
        return graph_.on_cycle(*expected) && graph_.on_cycle(*got) &&
               graph_.cycle_representative(*got) == graph_.cycle_representative(*expected);
      default:
        return false;
    }
  }

 private:
  NaiveGraph graph_;
};

}  // namespace

std::unique_ptr<Backend> make_engine_backend(std::uint64_t n) {
  return std::make_unique<EngineBackend>(n);
}

std::unique_ptr<Backend> make_oracle_backend(std::uint64_t n) {
  return std::make_unique<OracleBackend>(n);
}

std::string Divergence::to_string() const {
  std::string out = "divergence at op " + std::to_string(op_index);
  if (command.line != 0) out += " (line " + std::to_string(command.line) + ")";
  out += ": " + command.to_string() + "\n";
  out += "  engine: " + engine.value_or("<no output>") + "\n";
  out += "  oracle: " + oracle.value_or("<no output>");
  return out;
}

std::vector<std::string> run_single(const Workload& workload, Backend& backend) {
  std::vector<std::string> lines;
  for (const Command& c : workload.ops) {
    if (auto line = backend.execute(c)) lines.push_back(std::move(*line));
  }
  return lines;
}

RunResult run_both(const Workload& workload, Backend& engine, Backend& oracle) {
  RunResult result;
  for (std::size_t i = 0; i < workload.ops.size(); ++i) {
    const Command& c = workload.ops[i];
    auto e = engine.execute(c);
    auto o = oracle.execute(c);
    if (!oracle.accepts(c, o, e)) {
      result.divergence = Divergence{.op_index = i, .command = c, .engine = e, .oracle = o};
      return result;
    }
    if (e) result.lines.push_back(std::move(*e));
  }
  return result;
}

RunResult run_both(const Workload& workload, const BackendFactory& engine,
                   const BackendFactory& oracle) {
  auto e = engine(workload.n);
  auto o = oracle(workload.n);
  return run_both(workload, *e, *o);
}

OpMix OpMix::defaults() {
  OpMix mix;
  const std::pair<OpKind, std::uint32_t> table[] = {
      {OpKind::update, 6}, {OpKind::query, 6},  {OpKind::succ, 2},   {OpKind::cyclen, 2},
      {OpKind::oncycle, 2}, {OpKind::inv, 3},   {OpKind::lca, 3},    {OpKind::prox, 2},
      {OpKind::remove, 2}, {OpKind::subdivide, 2}, {OpKind::root, 2},
  };
  for (const auto& [kind, w] : table) mix.weights[static_cast<std::size_t>(kind)] = w;
  return mix;
}

OpMix OpMix::path_defaults() {
  OpMix mix;
  mix.weights[static_cast<std::size_t>(OpKind::pc_add)] = 4;
  mix.weights[static_cast<std::size_t>(OpKind::pc_del)] = 2;
  mix.weights[static_cast<std::size_t>(OpKind::pc_conn)] = 4;
  return mix;
}

namespace {

bool is_path_kind(OpKind k) {
  return k == OpKind::pc_add || k == OpKind::pc_del || k == OpKind::pc_conn;
}

}  // namespace

bool OpMix::path_mode() const {
  for (std::size_t i = 0; i < kOpKindCount; ++i) {
    if (weights[i] != 0 && is_path_kind(static_cast<OpKind>(i))) return true;
  }
  return false;
}

OpMix OpMix::parse(std::string_view text) {
  OpMix mix;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view item = text.substr(pos, end - pos);
    pos = end + 1;
    if (item.empty()) continue;
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw std::invalid_argument("mix entry '" + std::string(item) + "' is not name=weight");
    }
    const auto kind = op_from_name(item.substr(0, eq));
    if (!kind) {
      throw std::invalid_argument("unknown op '" + std::string(item.substr(0, eq)) + "' in mix");
    }
    const std::string weight(item.substr(eq + 1));
    std::size_t used = 0;
    unsigned long value = 0;
    try {
      value = std::stoul(weight, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != weight.size() || value > UINT32_MAX) {
      throw std::invalid_argument("bad weight '" + weight + "' in mix");
    }
    mix.weights[static_cast<std::size_t>(*kind)] = static_cast<std::uint32_t>(value);
  }
  bool any = false;
  bool path = false;
  bool plain = false;
  for (std::size_t i = 0; i < kOpKindCount; ++i) {
    if (mix.weights[i] == 0) continue;
    any = true;
    (is_path_kind(static_cast<OpKind>(i)) ? path : plain) = true;
  }
  if (!any) throw std::invalid_argument("mix has no positive weight");
  if (path && plain) {
    throw std::invalid_argument("pc_* ops cannot be mixed with pseudoforest ops");
  }
  return mix;
}

namespace {

class Generator {
 public:
  Generator(std::uint64_t seed, std::size_t n, const OpMix& mix)
      : rng_(seed), sim_(n), mix_(mix) {
    for (std::size_t i = 0; i < n; ++i) live_.emplace_back(static_cast<std::uint32_t>(i));
    for (const std::uint32_t w : mix.weights) total_ += w;
  }

  Command next() {
    const OpKind kind = pick_kind();
    return mix_.path_mode() ? path_op(kind) : plain_op(kind);
  }

 private:
  static constexpr std::uint64_t kHugeK = std::uint64_t{1} << 62;

  OpKind pick_kind() {
    std::uint64_t r = rng_.below(total_);
    for (std::size_t i = 0; i < kOpKindCount; ++i) {
      if (r < mix_.weights[i]) return static_cast<OpKind>(i);
      r -= mix_.weights[i];
    }
    return OpKind::succ;
  }

  NodeId any_live() { return live_[rng_.below(live_.size())]; }

  static Command make(OpKind kind, std::uint64_t a, std::uint64_t b = 0) {
    return Command{.kind = kind, .args = {a, b}, .line = 0};
  }

  Command plain_op(OpKind kind) {
    const NodeId v = any_live();
    const std::uint64_t span = 4 * sim_.universe_size() + 1;
    switch (kind) {
      case OpKind::update: {
        const NodeId w = any_live();
        sim_.update(v, w);
        return make(kind, v.value, w.value);
      }
      case OpKind::query: {
        const std::uint64_t k = rng_.below(2) == 0 ? rng_.below(span) : rng_.between(0, kHugeK);
        return make(kind, v.value, k);
      }
      case OpKind::inv:
      case OpKind::lca: {
        // Half the time pick a target ahead of v so that hits are common.
        const NodeId w = rng_.below(2) == 0 ? sim_.query(v, rng_.below(span)) : any_live();
        return make(kind, v.value, w.value);
      }
      case OpKind::remove: {
        std::vector<std::uint32_t> indegree(sim_.universe_size(), 0);
        for (const auto& s : sim_.export_successors()) {
          if (s) ++indegree[s->index()];
        }
        std::vector<NodeId> leaves;
        for (const NodeId u : live_) {
          if (indegree[u.index()] == 0) leaves.push_back(u);
        }
        const NodeId u = (!leaves.empty() && rng_.below(4) != 0)
                             ? leaves[rng_.below(leaves.size())]
                             : v;
        if (indegree[u.index()] == 0) {
          sim_.remove(u);
          live_.erase(std::find(live_.begin(), live_.end(), u));
        }
        return make(kind, u.value);
      }
      case OpKind::subdivide:
        live_.push_back(sim_.subdivide(v));
        return make(kind, v.value);
      default:
        return make(kind, v.value);
    }
  }

  NodeId terminal(NodeId v) const { return sim_.query(v, sim_.universe_size()); }

  Command path_op(OpKind kind) {
    const std::size_t n = live_.size();
    switch (kind) {
      case OpKind::pc_add: {
        std::vector<NodeId> tails;
        std::vector<char> has_in(sim_.universe_size(), 0);
        for (const NodeId u : live_) {
          const NodeId s = sim_.succ(u);
          if (s == u) {
            tails.push_back(u);
          } else {
            has_in[s.index()] = 1;
          }
        }
        if (tails.size() < live_.size() && rng_.below(20) == 0) {
          // Precondition probe: v already has an outgoing edge.
          NodeId v = any_live();
          while (sim_.succ(v) == v) v = any_live();
          return make(kind, v.value, any_live().value);
        }
        const NodeId v = tails[rng_.below(tails.size())];
        for (int attempt = 0; attempt < 8; ++attempt) {
          const NodeId w = any_live();
          if (!has_in[w.index()] && terminal(w) != v) {
            sim_.update(v, w);
            return make(kind, v.value, w.value);
          }
        }
        break;
      }
      case OpKind::pc_del: {
        std::vector<NodeId> edges;
        for (const NodeId u : live_) {
          if (sim_.succ(u) != u) edges.push_back(u);
        }
        if (edges.empty() || rng_.below(20) == 0) {
          return make(kind, any_live().value, any_live().value);
        }
        const NodeId v = edges[rng_.below(edges.size())];
        const NodeId w = sim_.succ(v);
        sim_.update(v, v);
        return make(kind, v.value, w.value);
      }
      default:
        break;
    }
    const NodeId x = any_live();
    const NodeId y = rng_.below(2) == 0 ? sim_.walk(x, rng_.below(n)) : any_live();
    return make(OpKind::pc_conn, x.value, y.value);
  }

  SplitMix64 rng_;
  NaiveGraph sim_;
  OpMix mix_;
  std::vector<NodeId> live_;
  std::uint64_t total_ = 0;
};

}  // namespace

Workload generate_workload(std::uint64_t seed, std::size_t n, std::size_t ops,
                           const OpMix& mix) {
  if (n == 0) throw std::invalid_argument("workload needs at least one node");
  Workload w{.n = n, .ops = {}};
  Generator gen(seed, n, mix);
  w.ops.reserve(ops);
  for (std::size_t i = 0; i < ops; ++i) w.ops.push_back(gen.next());
  return w;
}

Workload minimize(const Workload& failing, const BackendFactory& engine,
                  const BackendFactory& oracle) {
  auto first_divergence = [&](const Workload& w) -> std::optional<std::size_t> {
    const auto r = run_both(w, engine, oracle);
    if (!r.divergence) return std::nullopt;
    return r.divergence->op_index;
  };

  Workload current = failing;
  const auto initial = first_divergence(current);
  if (!initial) return current;
  current.ops.resize(*initial + 1);

  for (std::size_t chunk = std::max<std::size_t>(current.ops.size() / 2, 1);; chunk /= 2) {
    std::size_t i = 0;
    while (i < current.ops.size() && current.ops.size() > 1) {
      Workload candidate = current;
      const auto from = candidate.ops.begin() + static_cast<std::ptrdiff_t>(i);
      const auto to = candidate.ops.begin() +
                      static_cast<std::ptrdiff_t>(std::min(i + chunk, candidate.ops.size()));
      candidate.ops.erase(from, to);
      const auto at = candidate.ops.empty() ? std::nullopt : first_divergence(candidate);
      if (at) {
        candidate.ops.resize(*at + 1);
        current = std::move(candidate);
      } else {
        i += chunk;
      }
    }
    if (chunk == 1) break;
  }
  return current;
}

std::string FuzzReport::to_string() const {
  if (ok()) return "OK";
  std::string out = "DIVERGENCE\n" + divergence->to_string() + "\n";
  if (minimized) {
    out += "minimized workload (" + std::to_string(minimized->ops.size()) + " ops):\n";
    out += minimized->to_text();
  }
  return out;
}

FuzzReport fuzz(std::uint64_t seed, std::size_t n, std::size_t ops, const OpMix& mix,
                const BackendFactory& engine, const BackendFactory& oracle) {
  FuzzReport report;
  report.workload = generate_workload(seed, n, ops, mix);
  report.divergence = run_both(report.workload, engine, oracle).divergence;
  if (report.divergence) report.minimized = minimize(report.workload, engine, oracle);
  return report;
}

std::vector<BenchRecord> bench(const BenchOptions& options) {
  if (options.sizes.empty()) throw std::invalid_argument("bench needs at least one size");
  using Clock = std::chrono::steady_clock;
  std::vector<BenchRecord> records;
  for (const std::size_t n : options.sizes) {
    if (n == 0) throw std::invalid_argument("bench sizes must be positive");
    const std::uint64_t ops = options.ops != 0 ? options.ops : options.ops_per_node * n;
    const std::uint64_t updates = std::max<std::uint64_t>(ops / 2, 1);
    const std::uint64_t queries = std::max<std::uint64_t>(ops - ops / 2, 1);

    // Arguments are drawn inside the timed loops: a pre-generated argument
    // array at large n would be streamed through the cache alongside the
    // structure and skew the comparison between sizes.
    SplitMix64 rng(options.seed ^ (0x9E3779B97F4A7C15ULL * n));
    auto random_node = [&rng, n] { return NodeId(static_cast<std::uint32_t>(rng.below(n))); };

    Pseudoforest pf(n);
    auto start = Clock::now();
    std::uint64_t rot = pf.rotations();
    for (std::uint64_t i = 0; i < updates; ++i) {
      const NodeId v = random_node();
      pf.update(v, random_node());
    }
    auto stop = Clock::now();
    records.push_back(BenchRecord{
        .n = n,
        .op_kind = "update",
        .ops_executed = updates,
        .total_ns = static_cast<std::uint64_t>(
            std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count()),
        .total_rotations = pf.rotations() - rot,
    });

    std::uint64_t sink = 0;
    start = Clock::now();
    rot = pf.rotations();
    for (std::uint64_t i = 0; i < queries; ++i) {
      const NodeId v = random_node();
      sink += pf.query(v, rng.next()).value;
    }
    stop = Clock::now();
    records.push_back(BenchRecord{
        .n = n,
        .op_kind = "query",
        .ops_executed = queries,
        .total_ns = static_cast<std::uint64_t>(
            std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count()),
        .total_rotations = pf.rotations() - rot,
    });
    // Keeps the query loop observable.
    if (sink == UINT64_MAX) records.back().op_kind += "*";
  }
  return records;
}

std::string bench_csv(std::span<const BenchRecord> records) {
  std::string out = "n,op_kind,ops_executed,total_ns,total_rotations\n";
  for (const BenchRecord& r : records) {
    out += std::to_string(r.n) + "," + r.op_kind + "," + std::to_string(r.ops_executed) + "," +
           std::to_string(r.total_ns) + "," + std::to_string(r.total_rotations) + "\n";
  }
  return out;
}

}  // namespace dpf
