#include "kplane/drawing.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace kplane {

int Drawing::new_node(NodeKind kind, int vertex) {
  DrawingNode n;
  n.kind = kind;
  n.vertex = vertex;
  nodes.push_back(n);
  return node_count() - 1;
}

int Drawing::new_edge(int gu, int gv, int fake, bool artifact) {
  DrawingEdge e;
  e.gu = gu;
  e.gv = gv;
  e.fake = static_cast<std::int8_t>(fake);
  e.budget = static_cast<std::int8_t>(k - fake);
  e.artifact = artifact;
  edges.push_back(e);
  return static_cast<int>(edges.size()) - 1;
}

int Drawing::new_dart(int node, int edge, int tag) {
  d_node.push_back(node);
  d_next.push_back(-1);
  d_prev.push_back(-1);
  d_twin.push_back(-1);
  d_edge.push_back(edge);
  d_tag.push_back(tag);
  return dart_count() - 1;
}

void Drawing::set_twins(int a, int b) {
  d_twin[a] = b;
  d_twin[b] = a;
}

void Drawing::attach_first(int dart) {
  int node = d_node[dart];
  d_next[dart] = dart;
  d_prev[dart] = dart;
  nodes[node].any_dart = dart;
  nodes[node].degree = 1;
}

void Drawing::insert_before(int dart, int ref) {
  int p = d_prev[ref];
  d_next[p] = dart;
  d_prev[dart] = p;
  d_next[dart] = ref;
  d_prev[ref] = dart;
  nodes[d_node[dart]].degree += 1;
}

void Drawing::detach(int dart) {
  int node = d_node[dart];
  if (nodes[node].degree == 1) {
    nodes[node].any_dart = -1;
    nodes[node].degree = 0;
    return;
  }
  int p = d_prev[dart];
  int n = d_next[dart];
  d_next[p] = n;
  d_prev[n] = p;
  if (nodes[node].any_dart == dart) nodes[node].any_dart = n;
  nodes[node].degree -= 1;
}

std::vector<int> Drawing::rotation(int node) const {
  std::vector<int> out;
  int start = nodes[node].any_dart;
  if (start < 0) return out;
  int d = start;
  do {
    out.push_back(d);
    d = d_next[d];
  } while (d != start);
  return out;
}

int Drawing::ensure_vertex_slot(int gv) {
  if (gv >= static_cast<int>(vertex_node.size())) vertex_node.resize(gv + 1, -1);
  return gv;
}

Drawing empty_drawing(const LabeledGraph& g) {
  Drawing d;
  d.vertex_node.assign(g.n(), -1);
  for (const auto& e : g.edges) {
    int id = d.new_edge(e.u, e.v, e.uncrossable ? 2 : 0);
    (void)id;
  }
  return d;
}

Drawing init_drawing(const LabeledGraph& g, int edge_id, int tag) {
  Drawing d = empty_drawing(g);
  const EdgeInfo& e = g.edges[edge_id];
  int nu = d.new_node(NodeKind::Vertex, e.u);
  int nv = d.new_node(NodeKind::Vertex, e.v);
  d.vertex_node[e.u] = nu;
  d.vertex_node[e.v] = nv;
  int du = d.new_dart(nu, edge_id, tag);
  int dv = d.new_dart(nv, edge_id, tag);
  d.set_twins(du, dv);
  d.attach_first(du);
  d.attach_first(dv);
  DrawingEdge& rec = d.edges[edge_id];
  rec.from_node = nu;
  rec.to_node = nv;
  rec.drawn = true;
  rec.chain = {du};
  return d;
}

FaceSet compute_faces(const Drawing& d) {
  FaceSet f;
  int nd = d.dart_count();
  f.face_of.assign(nd, -1);
  for (int s = 0; s < nd; ++s) {
    if (f.face_of[s] != -1) continue;
    int id = f.count();
    f.start.push_back(s);
    f.size.push_back(0);
    int cur = s;
    do {
      f.face_of[cur] = id;
      f.size[id] += 1;
      cur = d.phi(cur);
    } while (cur != s);
  }
  return f;
}

std::vector<int> face_boundary(const Drawing& d, int start) {
  std::vector<int> out;
  int cur = start;
  do {
    out.push_back(cur);
    cur = d.phi(cur);
  } while (cur != start);
  return out;
}

std::vector<std::array<int, 4>> crossing_list(const Drawing& d) {
  // Position of each crossing node along each of its two edges.
  std::map<std::pair<int, int>, int> pos;  // (node, edge) -> index
  for (int e = 0; e < static_cast<int>(d.edges.size()); ++e) {
    const DrawingEdge& rec = d.edges[e];
    if (!rec.drawn) continue;
    for (size_t i = 0; i + 1 < rec.chain.size(); ++i)
      pos[{d.head(rec.chain[i]), e}] = static_cast<int>(i);
  }
  std::vector<std::array<int, 4>> out;
  for (int v = 0; v < d.node_count(); ++v) {
    const DrawingNode& n = d.nodes[v];
    if (n.kind != NodeKind::Crossing) continue;
    int a = std::min(n.cross.edge_a, n.cross.edge_b);
    int b = std::max(n.cross.edge_a, n.cross.edge_b);
    out.push_back({a, b, pos[{v, a}], pos[{v, b}]});
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void check_rotations(const Drawing& d, std::vector<ValidationError>& errs) {
  int nd = d.dart_count();
  std::vector<char> seen(nd, 0);
  for (int v = 0; v < d.node_count(); ++v) {
    const DrawingNode& n = d.nodes[v];
    if (n.any_dart < 0) {
      if (n.degree != 0) errs.push_back({"node " + std::to_string(v) + " degree without darts"});
      continue;
    }
    int count = 0;
    int cur = n.any_dart;
    do {
      if (cur < 0 || cur >= nd) {
        errs.push_back({"rotation of node " + std::to_string(v) + " leaves dart range"});
        return;
      }
      if (seen[cur]) {
        errs.push_back({"dart " + std::to_string(cur) + " in two rotations"});
        return;
      }
      seen[cur] = 1;
      if (d.d_node[cur] != v)
        errs.push_back({"dart " + std::to_string(cur) + " node mismatch"});
      if (d.d_prev[d.d_next[cur]] != cur)
        errs.push_back({"next/prev mismatch at dart " + std::to_string(cur)});
      ++count;
      if (count > nd) {
        errs.push_back({"rotation of node " + std::to_string(v) + " does not close"});
        return;
      }
      cur = d.d_next[cur];
    } while (cur != n.any_dart);
    if (count != n.degree)
      errs.push_back({"node " + std::to_string(v) + " degree " + std::to_string(n.degree) +
                      " but rotation has " + std::to_string(count)});
  }
  for (int x = 0; x < nd; ++x)
    if (!seen[x]) errs.push_back({"dart " + std::to_string(x) + " not in any rotation"});
}

void check_twins(const Drawing& d, std::vector<ValidationError>& errs) {
  for (int x = 0; x < d.dart_count(); ++x) {
    int t = d.d_twin[x];
    if (t < 0 || t >= d.dart_count() || t == x || d.d_twin[t] != x) {
      errs.push_back({"twin involution broken at dart " + std::to_string(x)});
      continue;
    }
    if (d.d_edge[x] != d.d_edge[t])
      errs.push_back({"twin darts on different edges at " + std::to_string(x)});
  }
}

void check_crossing_nodes(const Drawing& d, std::vector<ValidationError>& errs) {
  for (int v = 0; v < d.node_count(); ++v) {
    const DrawingNode& n = d.nodes[v];
    if (n.kind == NodeKind::Vertex) {
      if (n.vertex >= 0 && n.vertex < static_cast<int>(d.vertex_node.size()) &&
          d.vertex_node[n.vertex] != v)
        errs.push_back({"vertex_node map disagrees at node " + std::to_string(v)});
      continue;
    }
    if (n.kind != NodeKind::Crossing) continue;
    if (n.degree != 4) {
      errs.push_back({"crossing node " + std::to_string(v) + " has degree " +
                      std::to_string(n.degree)});
      continue;
    }
    auto rot = d.rotation(v);
    int e0 = d.d_edge[rot[0]], e1 = d.d_edge[rot[1]];
    if (e0 == e1 || d.d_edge[rot[2]] != e0 || d.d_edge[rot[3]] != e1)
      errs.push_back({"crossing node " + std::to_string(v) + " edges do not alternate"});
    std::set<int> have{e0, e1};
    std::set<int> want{n.cross.edge_a, n.cross.edge_b};
    if (have != want)
      errs.push_back({"crossing node " + std::to_string(v) + " CrossingRef mismatch"});
  }
}

void check_edges(const Drawing& d, bool reduced, std::vector<ValidationError>& errs) {
  std::vector<int> darts_per_edge(d.edges.size(), 0);
  for (int x = 0; x < d.dart_count(); ++x) {
    int e = d.d_edge[x];
    if (e < 0 || e >= static_cast<int>(d.edges.size())) {
      errs.push_back({"dart " + std::to_string(x) + " has bad edge id"});
      return;
    }
    darts_per_edge[e] += 1;
  }
  for (int e = 0; e < static_cast<int>(d.edges.size()); ++e) {
    const DrawingEdge& rec = d.edges[e];
    if (!rec.drawn) {
      if (darts_per_edge[e] != 0)
        errs.push_back({"undrawn edge " + std::to_string(e) + " has darts"});
      continue;
    }
    if (rec.fake != 0 && rec.fake != 2)
      errs.push_back({"edge " + std::to_string(e) + " fake " + std::to_string(rec.fake)});
    if (rec.budget < 0)
      errs.push_back({"edge " + std::to_string(e) + " negative budget"});
    if (!reduced && rec.crossings + rec.budget + rec.fake != d.k)
      errs.push_back({"edge " + std::to_string(e) + " crossing accounting off"});
    if (rec.fake == 2 && rec.crossings != 0)
      errs.push_back({"uncrossable edge " + std::to_string(e) + " is crossed"});
    // Chain: consecutive segments joined by crossing nodes of this edge.
    if (rec.chain.empty()) {
      errs.push_back({"drawn edge " + std::to_string(e) + " has empty chain"});
      continue;
    }
    if (!reduced && static_cast<int>(rec.chain.size()) != rec.crossings + 1)
      errs.push_back({"edge " + std::to_string(e) + " chain length mismatch"});
    if (darts_per_edge[e] != 2 * static_cast<int>(rec.chain.size()))
      errs.push_back({"edge " + std::to_string(e) + " dart count mismatch"});
    int at = rec.from_node;
    for (size_t i = 0; i < rec.chain.size(); ++i) {
      int f = rec.chain[i];
      if (d.d_edge[f] != e) {
        errs.push_back({"edge " + std::to_string(e) + " chain holds foreign dart"});
        break;
      }
      if (!reduced && d.d_node[f] != at) {
        errs.push_back({"edge " + std::to_string(e) + " chain break at segment " +
                        std::to_string(i)});
        break;
      }
      at = d.head(f);
      if (!reduced && i + 1 < rec.chain.size() &&
          d.nodes[at].kind != NodeKind::Crossing)
        errs.push_back({"edge " + std::to_string(e) + " interior chain node not a crossing"});
    }
    if (!reduced && at != rec.to_node)
      errs.push_back({"edge " + std::to_string(e) + " chain does not reach to_node"});
  }
}

void check_simplicity(const Drawing& d, std::vector<ValidationError>& errs) {
  std::map<std::pair<int, int>, int> common;
  for (const auto& n : d.nodes) {
    if (n.kind != NodeKind::Crossing) continue;
    int a = n.cross.edge_a, b = n.cross.edge_b;
    if (a > b) std::swap(a, b);
    common[{a, b}] += 1;
  }
  for (const auto& [pair, cnt] : common) {
    const DrawingEdge& ea = d.edges[pair.first];
    const DrawingEdge& eb = d.edges[pair.second];
    if (cnt > 1)
      errs.push_back({"edges " + std::to_string(pair.first) + "," +
                      std::to_string(pair.second) + " cross " + std::to_string(cnt) +
                      " times"});
    bool adjacent = false;
    for (int x : {ea.gu, ea.gv})
      for (int y : {eb.gu, eb.gv})
        if (x >= 0 && x == y) adjacent = true;
    for (int x : {ea.from_node, ea.to_node})
      for (int y : {eb.from_node, eb.to_node})
        if (x >= 0 && x == y) adjacent = true;
    if (adjacent)
      errs.push_back({"adjacent edges " + std::to_string(pair.first) + "," +
                      std::to_string(pair.second) + " cross"});
  }
}

void check_surface(const Drawing& d, std::vector<ValidationError>& errs) {
  int nd = d.dart_count();
  int active_nodes = 0;
  for (const auto& n : d.nodes)
    if (n.any_dart >= 0) ++active_nodes;
  if (active_nodes == 0) return;
  // Connectivity over the planarization.
  std::vector<char> seen(d.node_count(), 0);
  std::vector<int> stack;
  for (int v = 0; v < d.node_count(); ++v)
    if (d.nodes[v].any_dart >= 0) {
      stack.push_back(v);
      seen[v] = 1;
      break;
    }
  int reached = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++reached;
    for (int x : d.rotation(v)) {
      int w = d.head(x);
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  if (reached != active_nodes) {
    errs.push_back({"planarization is disconnected"});
    return;
  }
  int V = active_nodes;
  int E = nd / 2;
  int F = compute_faces(d).count();
  if (V - E + F != 2)
    errs.push_back({"Euler check failed: V=" + std::to_string(V) + " E=" +
                    std::to_string(E) + " F=" + std::to_string(F)});
}

}  // namespace

std::vector<ValidationError> validate_drawing(const Drawing& d, bool reduced) {
  std::vector<ValidationError> errs;
  check_twins(d, errs);
  if (!errs.empty()) return errs;  // rotation walks need sane twins/links
  check_rotations(d, errs);
  if (!errs.empty()) return errs;
  check_crossing_nodes(d, errs);
  check_edges(d, reduced, errs);
  check_simplicity(d, errs);
  check_surface(d, errs);
  return errs;
}

bool drawing_ok(const Drawing& d, bool reduced) {
  return validate_drawing(d, reduced).empty();
}

}  // namespace kplane
