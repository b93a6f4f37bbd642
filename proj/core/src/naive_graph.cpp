#include "dpf/naive_graph.hpp"

#include <algorithm>
#include <queue>

#include "dpf/error.hpp"

namespace dpf {

NaiveGraph::NaiveGraph(std::size_t n) : succ_(n), live_count_(n) {
  for (std::size_t i = 0; i < n; ++i) {
    succ_[i] = NodeId(static_cast<std::uint32_t>(i));
  }
}

void NaiveGraph::check_live(NodeId v) const {
  if (v.index() >= succ_.size()) throw errors::invalid_node(v.value);
  if (!succ_[v.index()]) throw errors::dead_node(v);
}

NodeId NaiveGraph::succ(NodeId v) const {
  check_live(v);
  return next(v);
}

void NaiveGraph::update(NodeId v, NodeId w) {
  check_live(v);
  check_live(w);
  succ_[v.index()] = w;
}

std::pair<std::uint64_t, std::uint64_t> NaiveGraph::rho(NodeId v) const {
  std::vector<std::uint64_t> seen(succ_.size(), UINT64_MAX);
  std::uint64_t pos = 0;
  NodeId x = v;
  while (seen[x.index()] == UINT64_MAX) {
    seen[x.index()] = pos++;
    x = next(x);
  }
  return {seen[x.index()], pos - seen[x.index()]};
}

NodeId NaiveGraph::query(NodeId v, std::uint64_t k) const {
  check_live(v);
  const auto [tail, period] = rho(v);
  if (k <= tail) return walk(v, k);
  return walk(v, tail + (k - tail) % period);
}

NodeId NaiveGraph::walk(NodeId v, std::uint64_t k) const {
  check_live(v);
  NodeId x = v;
  for (std::uint64_t i = 0; i < k; ++i) x = next(x);
  return x;
}

std::uint64_t NaiveGraph::cycle_length(NodeId v) const {
  check_live(v);
  return rho(v).second;
}

bool NaiveGraph::on_cycle(NodeId v) const {
  check_live(v);
  return rho(v).first == 0;
}

std::optional<std::uint64_t> NaiveGraph::inverse_query(NodeId x, NodeId y) const {
  check_live(x);
  check_live(y);
  const auto [tail, period] = rho(x);
  // Every node x can reach shows up within tail + period steps.
  NodeId cur = x;
  for (std::uint64_t k = 0; k < tail + period; ++k) {
    if (cur == y) return k;
    cur = next(cur);
  }
  return std::nullopt;
}

std::optional<NodeId> NaiveGraph::lca(NodeId x, NodeId y) const {
  check_live(x);
  check_live(y);
  std::vector<char> reached(succ_.size(), 0);
  NodeId cur = y;
  while (!reached[cur.index()]) {
    reached[cur.index()] = 1;
    cur = next(cur);
  }
  const auto [tail, period] = rho(x);
  cur = x;
  for (std::uint64_t k = 0; k < tail + period; ++k) {
    if (reached[cur.index()]) return cur;
    cur = next(cur);
  }
  return std::nullopt;
}

std::uint64_t NaiveGraph::cycle_proximity(NodeId v) const {
  check_live(v);
  return rho(v).first;
}

void NaiveGraph::remove(NodeId v) {
  check_live(v);
  if (indegree(v) != 0) throw errors::has_incoming_edges(v);
  succ_[v.index()].reset();
  --live_count_;
}

NodeId NaiveGraph::subdivide(NodeId x) {
  check_live(x);
  const NodeId y(static_cast<std::uint32_t>(succ_.size()));
  succ_.push_back(next(x));
  succ_[x.index()] = y;
  ++live_count_;
  return y;
}

NodeId NaiveGraph::cycle_representative(NodeId v) const {
  check_live(v);
  const auto [tail, period] = rho(v);
  NodeId x = walk(v, tail);
  NodeId best = x;
  for (std::uint64_t i = 1; i < period; ++i) {
    x = next(x);
    best = std::min(best, x);
  }
  return best;
}

std::size_t NaiveGraph::indegree(NodeId v) const {
  check_live(v);
  return static_cast<std::size_t>(
      std::count(succ_.begin(), succ_.end(), std::optional<NodeId>(v)));
}

bool NaiveGraph::support_connected(NodeId x, NodeId y) const {
  check_live(x);
  check_live(y);
  std::vector<std::vector<std::uint32_t>> adj(succ_.size());
  for (std::uint32_t u = 0; u < succ_.size(); ++u) {
    if (!succ_[u] || succ_[u]->value == u) continue;
    adj[u].push_back(succ_[u]->value);
    adj[succ_[u]->value].push_back(u);
  }
  std::vector<char> seen(succ_.size(), 0);
  std::queue<std::uint32_t> frontier;
  frontier.push(x.value);
  seen[x.index()] = 1;
  while (!frontier.empty()) {
    const std::uint32_t u = frontier.front();
    frontier.pop();
    if (u == y.value) return true;
    for (const std::uint32_t w : adj[u]) {
      if (!seen[w]) {
        seen[w] = 1;
        frontier.push(w);
      }
    }
  }
  return false;
}

NaiveGraph::Decomposition NaiveGraph::decompose() const {
  const std::size_t n = succ_.size();
  constexpr std::uint32_t kUnset = UINT32_MAX;
  Decomposition out;
  out.cycle_of.assign(n, kUnset);
  out.tail_distance.assign(n, 0);
  out.entry.assign(n, NodeId{});

  // Colour walks: 0 = unvisited, 1 = on the current walk, 2 = finished.
  std::vector<std::uint8_t> state(n, 0);
  std::vector<NodeId> path;
  for (std::uint32_t s = 0; s < n; ++s) {
    if (!succ_[s] || state[s] != 0) continue;
    path.clear();
    NodeId x(s);
    while (state[x.index()] == 0) {
      state[x.index()] = 1;
      path.push_back(x);
      x = next(x);
    }
    std::size_t resolved = path.size();
    if (state[x.index()] == 1) {
      // Closed a new cycle; its nodes are the suffix of the walk from x.
      const auto start = std::find(path.begin(), path.end(), x);
      std::vector<NodeId> cycle(start, path.end());
      std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()),
                  cycle.end());
      const auto id = static_cast<std::uint32_t>(out.cycles.size());
      for (const NodeId c : cycle) {
        out.cycle_of[c.index()] = id;
        out.tail_distance[c.index()] = 0;
        out.entry[c.index()] = c;
        state[c.index()] = 2;
      }
      out.cycles.push_back(std::move(cycle));
      resolved = static_cast<std::size_t>(start - path.begin());
    }
    // The remaining prefix is tail, resolved backwards from its successor.
    for (std::size_t i = resolved; i-- > 0;) {
      const NodeId u = path[i];
      const NodeId nx = next(u);
      out.cycle_of[u.index()] = out.cycle_of[nx.index()];
      out.tail_distance[u.index()] = out.tail_distance[nx.index()] + 1;
      out.entry[u.index()] = out.entry[nx.index()];
      state[u.index()] = 2;
    }
  }
  return out;
}

}  // namespace dpf
