#include "wrapcam/maxflow.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

namespace wrapcam {

namespace {
// Residual capacities below this are treated as saturated so rounding
// dust cannot generate endless augmenting paths.
constexpr double kCapEps = 1e-12;
}  // namespace

MaxFlowGraph::MaxFlowGraph(int node_count)
    : adj_(node_count), level_(node_count), iter_(node_count),
      reachable_(node_count, 0) {
  if (node_count < 2)
    throw std::invalid_argument("MaxFlowGraph: need at least 2 nodes");
}

void MaxFlowGraph::add_edge(int from, int to, double cap, double rev_cap) {
  if (from == to) return;
  if (cap < 0.0 || rev_cap < 0.0)
    throw std::invalid_argument("MaxFlowGraph: negative capacity");
  Edge fwd{to, static_cast<int>(adj_[to].size()), cap};
  Edge bwd{from, static_cast<int>(adj_[from].size()), rev_cap};
  adj_[from].push_back(fwd);
  adj_[to].push_back(bwd);
}

bool MaxFlowGraph::bfs_levels(int source, int sink) {
  std::fill(level_.begin(), level_.end(), -1);
  std::queue<int> queue;
  level_[source] = 0;
  queue.push(source);
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop();
    for (const Edge& e : adj_[v]) {
      if (e.cap > kCapEps && level_[e.to] < 0) {
        level_[e.to] = level_[v] + 1;
        queue.push(e.to);
      }
    }
  }
  return level_[sink] >= 0;
}

double MaxFlowGraph::dfs_augment(int node, int sink, double limit) {
  if (node == sink) return limit;
  for (int& i = iter_[node]; i < static_cast<int>(adj_[node].size()); ++i) {
    Edge& e = adj_[node][i];
    if (e.cap > kCapEps && level_[e.to] == level_[node] + 1) {
      const double pushed = dfs_augment(e.to, sink, std::min(limit, e.cap));
      if (pushed > 0.0) {
        e.cap -= pushed;
        adj_[e.to][e.rev].cap += pushed;
        return pushed;
      }
    }
  }
  return 0.0;
}

void MaxFlowGraph::mark_reachable(int source) {
  std::fill(reachable_.begin(), reachable_.end(), 0);
  std::queue<int> queue;
  reachable_[source] = 1;
  queue.push(source);
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop();
    for (const Edge& e : adj_[v]) {
      if (e.cap > kCapEps && !reachable_[e.to]) {
        reachable_[e.to] = 1;
        queue.push(e.to);
      }
    }
  }
}

double MaxFlowGraph::solve(int source, int sink) {
  if (source == sink)
    throw std::invalid_argument("MaxFlowGraph: source == sink");
  double flow = 0.0;
  const double inf = std::numeric_limits<double>::infinity();
  while (bfs_levels(source, sink)) {
    std::fill(iter_.begin(), iter_.end(), 0);
    while (true) {
      const double pushed = dfs_augment(source, sink, inf);
      if (pushed <= 0.0) break;
      flow += pushed;
    }
  }
  mark_reachable(source);
  return flow;
}

}  // namespace wrapcam
