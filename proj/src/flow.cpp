#include "kplane/flow.hpp"

#include <algorithm>
#include <queue>

namespace kplane {

int FlowNetwork::add_node() {
  out.emplace_back();
  return int(out.size()) - 1;
}

int FlowNetwork::add_arc(int u, int v, int cap) {
  int id = int(arcs.size());
  arcs.push_back({v, cap});
  arcs.push_back({u, 0});
  out[u].push_back(id);
  out[v].push_back(id + 1);
  return id;
}

int FlowNetwork::max_flow(int s, int t, int limit) {
  if (s == t) return limit;
  int total = 0;
  std::vector<int> via(out.size());
  while (total < limit) {
    std::fill(via.begin(), via.end(), -1);
    via[s] = -2;
    std::queue<int> bfs;
    bfs.push(s);
    while (!bfs.empty() && via[t] == -1) {
      int u = bfs.front();
      bfs.pop();
      for (int a : out[u]) {
        int v = arcs[a].to;
        if (via[v] != -1 || arcs[a].cap <= 0) continue;
        via[v] = a;
        bfs.push(v);
      }
    }
    if (via[t] == -1) break;
    int push = limit - total;
    for (int v = t; v != s;) {
      int a = via[v];
      push = std::min(push, arcs[a].cap);
      v = arcs[a ^ 1].to;
    }
    for (int v = t; v != s;) {
      int a = via[v];
      arcs[a].cap -= push;
      arcs[a ^ 1].cap += push;
      v = arcs[a ^ 1].to;
    }
    total += push;
  }
  return total;
}

}  // namespace kplane
