#pragma once

#include <vector>

namespace wrapcam {

// s-t max-flow / min-cut on a directed graph with double capacities,
// solved by Dinic's augmenting-path algorithm (BFS level graph plus
// blocking-flow DFS). Deterministic for a fixed edge insertion order.
class MaxFlowGraph {
 public:
  explicit MaxFlowGraph(int node_count);

  // Adds the arc from->to with capacity cap and the reverse arc with
  // capacity rev_cap (0 for a plain directed edge).
  void add_edge(int from, int to, double cap, double rev_cap = 0.0);

  double solve(int source, int sink);

  // Valid after solve(): true when the node lies on the source side of
  // the minimum cut (reachable through residual capacity).
  bool on_source_side(int node) const { return reachable_[node] != 0; }

  int node_count() const { return static_cast<int>(adj_.size()); }

 private:
  struct Edge {
    int to;
    int rev;  // index of the reverse edge in adj_[to]
    double cap;
  };

  bool bfs_levels(int source, int sink);
  double dfs_augment(int node, int sink, double limit);
  void mark_reachable(int source);

  std::vector<std::vector<Edge>> adj_;
  std::vector<int> level_;
  std::vector<int> iter_;
  std::vector<char> reachable_;
};

}  // namespace wrapcam
