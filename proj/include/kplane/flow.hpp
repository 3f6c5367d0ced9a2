#pragma once

#include <vector>

namespace kplane {

// Small integer max-flow network (Edmonds-Karp).  Arcs are stored in pairs:
// add_arc(u, v, cap) creates the forward arc at an even index and its
// residual reverse at the next index, so arc i's reverse is i ^ 1.
struct FlowNetwork {
  struct Arc {
    int to = -1;
    int cap = 0;
  };

  std::vector<Arc> arcs;
  std::vector<std::vector<int>> out;  // node -> arc indices

  int add_node();
  // Returns the index of the forward arc.
  int add_arc(int u, int v, int cap);

  // Max flow from s to t, stopping early once `limit` units arrived.
  // s == t counts as unbounded supply, so it returns `limit`.
  // Mutates residual capacities; call on a fresh copy to reuse a network.
  int max_flow(int s, int t, int limit);
};

}  // namespace kplane
