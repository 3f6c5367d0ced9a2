#include "kplane/canonical.hpp"

#include <functional>
#include <limits>
#include <stdexcept>

namespace kplane {

namespace {

using LabelFn = std::function<void(int, std::string&)>;

// Breadth-first serialization of the planarization, rooted at a dart and
// read with a fixed orientation.  Two drawings produce the same string iff
// an isomorphism matches roots, preserves rotations (reversed when mirror is
// set), and preserves the node/edge labels.
std::string bfs_serialize(const Drawing& d, int root_dart, bool mirror,
                          const LabelFn& node_label, const LabelFn& edge_label) {
  std::string out;
  out.reserve(16 * d.node_count());
  std::vector<int> bfs_id(d.node_count(), -1);
  std::vector<int> entry(d.node_count(), -1);
  std::vector<int> order;
  order.reserve(d.node_count());
  int root = d.d_node[root_dart];
  bfs_id[root] = 0;
  entry[root] = root_dart;
  order.push_back(root);
  for (std::size_t qi = 0; qi < order.size(); ++qi) {
    int v = order[qi];
    node_label(v, out);
    out += '(';
    int start = entry[v];
    int x = start;
    do {
      int h = d.head(x);
      if (bfs_id[h] < 0) {
        bfs_id[h] = static_cast<int>(order.size());
        entry[h] = d.d_twin[x];
        order.push_back(h);
      }
      out += std::to_string(bfs_id[h]);
      edge_label(x, out);
      out += ',';
      x = mirror ? d.d_prev[x] : d.d_next[x];
    } while (x != start);
    out += ')';
  }
  return out;
}

void append_kind(const Drawing& d, int v, std::string& out) {
  switch (d.nodes[v].kind) {
    case NodeKind::Vertex: out += 'v'; break;
    case NodeKind::Crossing: out += 'c'; break;
    case NodeKind::Bend: out += 'b'; break;
    case NodeKind::Hub: out += 'h'; break;
  }
}

int least_placed_node(const Drawing& d) {
  for (int gv = 0; gv < static_cast<int>(d.vertex_node.size()); ++gv)
    if (d.vertex_node[gv] >= 0) return d.vertex_node[gv];
  throw std::logic_error("drawing has no placed vertices");
}

}  // namespace

std::string labeled_key(const Drawing& d) {
  int node = least_placed_node(d);
  int root = -1, best = std::numeric_limits<int>::max();
  for (int x : d.rotation(node))
    if (d.d_edge[x] < best) {
      best = d.d_edge[x];
      root = x;
    }
  auto nl = [&](int v, std::string& out) {
    append_kind(d, v, out);
    if (d.nodes[v].kind == NodeKind::Vertex) out += std::to_string(d.nodes[v].vertex);
  };
  auto el = [&](int x, std::string& out) {
    out += 'e';
    out += std::to_string(d.d_edge[x]);
  };
  return bfs_serialize(d, root, false, nl, el);
}

std::string canonical_key(const Drawing& d, const LabeledGraph& g) {
  auto autos = automorphisms(g);
  std::string best;
  std::vector<int> emap(g.m());
  for (const auto& pi : autos) {
    for (int e = 0; e < g.m(); ++e)
      emap[e] = g.edge_index(pi[g.edges[e].u], pi[g.edges[e].v]);
    int w = -1;  // vertex mapped to 0 by pi
    for (int v = 0; v < g.n(); ++v)
      if (pi[v] == 0) w = v;
    int node = d.vertex_node[w];
    int root = -1, least = std::numeric_limits<int>::max();
    for (int x : d.rotation(node)) {
      int relabeled = emap[d.d_edge[x]];
      if (relabeled < least) {
        least = relabeled;
        root = x;
      }
    }
    auto nl = [&](int v, std::string& out) {
      append_kind(d, v, out);
      if (d.nodes[v].kind == NodeKind::Vertex)
        out += std::to_string(pi[d.nodes[v].vertex]);
    };
    auto el = [&](int x, std::string& out) {
      out += 'e';
      out += std::to_string(emap[d.d_edge[x]]);
    };
    for (bool mirror : {false, true}) {
      std::string s = bfs_serialize(d, root, mirror, nl, el);
      if (best.empty() || s < best) best = std::move(s);
    }
  }
  return best;
}

std::string cycle_canonical_key(const Drawing& d, const std::vector<int>& cycle_nodes,
                                CycleMaps maps_kind) {
  int L = static_cast<int>(cycle_nodes.size());
  if (L < 3) throw std::invalid_argument("cycle_canonical_key: cycle too short");
  if (maps_kind != CycleMaps::Dihedral && L % 2 != 0)
    throw std::invalid_argument("cycle_canonical_key: parity maps need an even cycle");

  std::vector<int> frontier_pos(d.node_count(), -1);
  for (int i = 0; i < L; ++i) frontier_pos[cycle_nodes[i]] = i;

  bool all = maps_kind == CycleMaps::Dihedral;
  bool reflections = maps_kind != CycleMaps::EvenRotations;
  // Dihedral and BraidedMirrored compare both orientations under every map;
  // Braided ties the orientation to the map (reflections flip it) and
  // EvenRotations keeps only the orientation-preserving serializations.
  bool free_mirror = maps_kind == CycleMaps::Dihedral || maps_kind == CycleMaps::BraidedMirrored;

  // Candidate relabelings as position -> new index maps.
  struct Cand {
    std::vector<int> m;
    bool refl;
  };
  std::vector<Cand> maps;
  for (int s = 0; s < L; ++s) {
    if (!all && s % 2 != 0) continue;
    std::vector<int> m(L);
    for (int p = 0; p < L; ++p) m[p] = (p - s + L) % L;
    maps.push_back({std::move(m), false});
  }
  for (int c = 0; reflections && c < L; ++c) {
    if (!all && c % 2 == 0) continue;
    std::vector<int> m(L);
    for (int p = 0; p < L; ++p) m[p] = (c - p + L) % L;
    maps.push_back({std::move(m), true});
  }

  std::string best;
  for (const auto& [m, refl] : maps) {
    int pos0 = -1, pos1 = -1;
    for (int p = 0; p < L; ++p) {
      if (m[p] == 0) pos0 = p;
      if (m[p] == 1) pos1 = p;
    }
    int a = cycle_nodes[pos0], b = cycle_nodes[pos1];
    // Any dart of an edge joining the two nodes may serve as the root; the
    // minimum over all of them keeps the key independent of edge numbering.
    std::vector<int> roots;
    for (int x : d.rotation(a)) {
      const DrawingEdge& er = d.edges[d.d_edge[x]];
      bool joins = (er.from_node == a && er.to_node == b) ||
                   (er.from_node == b && er.to_node == a);
      if (joins) roots.push_back(x);
    }
    if (roots.empty()) roots = d.rotation(a);
    auto nl = [&](int v, std::string& out) {
      append_kind(d, v, out);
      if (d.nodes[v].kind == NodeKind::Vertex) {
        int p = frontier_pos[v];
        if (p >= 0) out += std::to_string(m[p]);
      }
    };
    auto el = [&](int x, std::string& out) {
      const DrawingEdge& er = d.edges[d.d_edge[x]];
      out += '[';
      out += std::to_string(er.budget);
      out += std::to_string(er.fake);
      out += er.artifact ? '*' : '.';
      out += ']';
    };
    for (int root : roots)
      for (bool mirror : {false, true}) {
        if (!free_mirror && mirror != refl) continue;
        std::string s = bfs_serialize(d, root, mirror, nl, el);
        if (best.empty() || s < best) best = std::move(s);
      }
  }
  return best;
}

}  // namespace kplane
