#include "kplane/saturate.hpp"

#include <atomic>
#include <queue>
#include <stdexcept>
#include <thread>

namespace kplane {

namespace {

bool spherical(const Drawing& d) {
  FaceSet f = compute_faces(d);
  return d.node_count() - d.dart_count() / 2 + f.count() == 2;
}

bool insertable(const Drawing& d, int u, int v, int k) {
  Drawing scratch = d;
  scratch.k = k;
  int e = scratch.new_edge(u, v, 0);
  FaceSet faces = compute_faces(scratch);
  for (const auto& plan : insertion_plans(scratch, faces, e)) {
    AppliedPlan a = apply_plan(scratch, plan);
    bool ok = spherical(scratch);
    undo_plan(scratch, a);
    if (ok) return true;
  }
  return false;
}

std::vector<std::pair<int, int>> candidate_pairs(const Drawing& d) {
  int nv = static_cast<int>(d.vertex_node.size());
  std::vector<std::vector<char>> adj(nv, std::vector<char>(nv, 0));
  for (const auto& rec : d.edges) adj[rec.gu][rec.gv] = adj[rec.gv][rec.gu] = 1;
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < nv; ++u) {
    if (d.vertex_node[u] < 0) continue;
    for (int v = u + 1; v < nv; ++v)
      if (d.vertex_node[v] >= 0 && !adj[u][v]) out.emplace_back(u, v);
  }
  return out;
}

}  // namespace

std::vector<std::pair<int, int>> addable_edges(const Drawing& d, int k) {
  std::vector<std::pair<int, int>> out;
  for (auto [u, v] : candidate_pairs(d))
    if (insertable(d, u, v, k)) out.emplace_back(u, v);
  return out;
}

bool drawing_saturated(const Drawing& d, int k) {
  for (auto [u, v] : candidate_pairs(d))
    if (insertable(d, u, v, k)) return false;
  return true;
}

TriState graph_maximal(const LabeledGraph& g, int k, std::uint64_t max_expansions,
                       int threads) {
  std::vector<std::pair<int, int>> cand;
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v)
      if (!g.has_edge(u, v)) cand.emplace_back(u, v);
  if (cand.empty()) return TriState::Yes;

  std::atomic<std::size_t> next{0};
  std::atomic<bool> extendable{false};
  std::atomic<bool> undecided{false};
  auto worker = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= cand.size() || extendable.load()) return;
      LabeledGraph h = g;
      h.add_edge(cand[i].first, cand[i].second);
      KPlanarResult r = is_k_planar(h, k, max_expansions);
      if (r.outcome == TriState::Yes) extendable.store(true);
      if (r.outcome == TriState::Unknown) undecided.store(true);
    }
  };
  int nt = std::max(1, std::min<int>(threads, static_cast<int>(cand.size())));
  if (nt == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < nt; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (extendable.load()) return TriState::No;
  if (undecided.load()) return TriState::Unknown;
  return TriState::Yes;
}

bool doubly_crossed_separation(const Drawing& d, int u, int v) {
  if (u < 0 || v < 0 || u >= static_cast<int>(d.vertex_node.size()) ||
      v >= static_cast<int>(d.vertex_node.size()) || d.vertex_node[u] < 0 ||
      d.vertex_node[v] < 0)
    throw std::invalid_argument("doubly_crossed_separation: endpoint not placed");
  for (const auto& rec : d.edges)
    if ((rec.gu == u && rec.gv == v) || (rec.gu == v && rec.gv == u))
      throw std::invalid_argument("doubly_crossed_separation: endpoints adjacent");

  FaceSet faces = compute_faces(d);
  std::vector<char> visited(faces.count(), 0);
  std::queue<int> frontier;
  for (int x : d.rotation(d.vertex_node[u])) {
    int f = faces.face_of[x];
    if (!visited[f]) {
      visited[f] = 1;
      frontier.push(f);
    }
  }
  std::vector<char> target(faces.count(), 0);
  for (int x : d.rotation(d.vertex_node[v])) target[faces.face_of[x]] = 1;

  std::vector<std::vector<int>> arcs(faces.count());
  for (int x = 0; x < d.dart_count(); ++x)
    if (d.edges[d.d_edge[x]].budget >= 1)
      arcs[faces.face_of[x]].push_back(faces.face_of[d.twin(x)]);

  while (!frontier.empty()) {
    int f = frontier.front();
    frontier.pop();
    if (target[f]) return false;
    for (int g : arcs[f])
      if (!visited[g]) {
        visited[g] = 1;
        frontier.push(g);
      }
  }
  return true;
}

}  // namespace kplane
