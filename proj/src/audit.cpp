#include "kplane/audit.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <thread>

#include "kplane/canonical.hpp"
#include "kplane/saturate.hpp"

namespace kplane {

namespace {

// Adjacency, degrees and incident edge ids recovered from the drawing's real
// edge records.  Everything in the audit reads the graph through this view,
// so ledgers can also be resolved against hand-built records without darts.
struct GraphView {
  int n = 0;
  std::vector<int> degree;
  std::vector<std::vector<int>> adj;  // sorted neighbor ids
  std::vector<std::vector<int>> inc;  // incident real edge ids
};

GraphView view_of(const Drawing& d) {
  GraphView gv;
  gv.n = static_cast<int>(d.vertex_node.size());
  gv.adj.resize(gv.n);
  gv.inc.resize(gv.n);
  for (int e = 0; e < static_cast<int>(d.edges.size()); ++e) {
    const DrawingEdge& rec = d.edges[e];
    if (rec.artifact || rec.gu < 0 || rec.gv < 0) continue;
    gv.adj[rec.gu].push_back(rec.gv);
    gv.adj[rec.gv].push_back(rec.gu);
    gv.inc[rec.gu].push_back(e);
    gv.inc[rec.gv].push_back(e);
  }
  gv.degree.resize(gv.n);
  for (int v = 0; v < gv.n; ++v) {
    std::sort(gv.adj[v].begin(), gv.adj[v].end());
    std::sort(gv.inc[v].begin(), gv.inc[v].end());
    gv.degree[v] = static_cast<int>(gv.adj[v].size());
  }
  return gv;
}

bool adjacent(const GraphView& gv, int a, int b) {
  return std::binary_search(gv.adj[a].begin(), gv.adj[a].end(), b);
}

int edge_between(const Drawing& d, const GraphView& gv, int a, int b) {
  if (a < 0 || b < 0 || a >= gv.n || b >= gv.n) return -1;
  for (int e : gv.inc[a]) {
    const DrawingEdge& rec = d.edges[e];
    if (rec.gu == b || rec.gv == b) return e;
  }
  return -1;
}

int other_end(const Drawing& d, int edge, int v) {
  const DrawingEdge& rec = d.edges[edge];
  return rec.gu == v ? rec.gv : rec.gu;
}

// Graph vertex placed at the start of an edge's chain.
int from_vertex(const Drawing& d, int edge) {
  int node = d.edges[edge].from_node;
  return node >= 0 ? d.nodes[node].vertex : -1;
}

// The edges before and after `edge` in the rotation at vertex v.  Full
// drawings have exactly one dart per incident edge at a vertex.
std::array<int, 2> rotation_neighbors(const Drawing& d, int v, int edge) {
  int node = d.vertex_node[v];
  std::vector<int> rot = d.rotation(node);
  for (std::size_t i = 0; i < rot.size(); ++i) {
    if (d.d_edge[rot[i]] != edge) continue;
    int prev = rot[(i + rot.size() - 1) % rot.size()];
    int next = rot[(i + 1) % rot.size()];
    return {d.d_edge[prev], d.d_edge[next]};
  }
  return {-1, -1};
}

// True when the piece of `edge` between endpoint y and its crossing at chain
// position `pos` carries no other crossing.
bool end_piece_uncrossed(const Drawing& d, int edge, int y, int pos) {
  const DrawingEdge& rec = d.edges[edge];
  int fv = from_vertex(d, edge);
  if (y == fv) return pos == 0;
  return pos == rec.crossings - 1;
}

VertexClass classify_at(const Drawing& d, const GraphView& gv,
                        const std::vector<std::array<int, 4>>& xings, int v) {
  VertexClass c;
  c.vertex = v;
  c.degree = gv.degree[v];
  for (int e : gv.inc[v]) {
    if (d.edges[e].crossings == 0)
      c.uncrossed.push_back(e);
    else
      c.crossed.push_back(e);
  }

  if (c.degree < 2) {
    c.kind = VertexKind::Degenerate;
    return c;
  }
  if (c.degree == 2) {
    c.kind = VertexKind::Hermit;
    c.host_edge = edge_between(d, gv, gv.adj[v][0], gv.adj[v][1]);
    return c;
  }
  if (c.degree == 3) {
    if (c.uncrossed.size() == 1) {
      c.kind = VertexKind::T3_1;
      c.anchor = other_end(d, c.uncrossed[0], v);
      return c;
    }
    if (c.uncrossed.size() == 2) {
      c.kind = VertexKind::T3_2;
      int e_uv = c.crossed[0];
      for (const auto& x : xings) {
        int f = -1, pos = -1;
        if (x[0] == e_uv) {
          f = x[1];
          pos = x[3];
        } else if (x[1] == e_uv) {
          f = x[0];
          pos = x[2];
        } else {
          continue;
        }
        c.crossing_edge = f;
        // Prefer the endpoint that matches the expected shape: a neighbor
        // of v's owner reached by an uncrossed end piece, of high degree.
        int best = -1, best_tier = 4;
        int cand[2] = {d.edges[f].gu, d.edges[f].gv};
        if (cand[0] > cand[1]) std::swap(cand[0], cand[1]);
        for (int y : cand) {
          int tier = 3;
          if (adjacent(gv, v, y)) {
            tier = 2;
            if (end_piece_uncrossed(d, f, y, pos)) {
              tier = gv.degree[y] >= high_degree ? 0 : 1;
            }
          }
          if (tier < best_tier) {
            best_tier = tier;
            best = y;
          }
        }
        if (best_tier <= 2) {
          c.anchor = best;
          c.far_end = other_end(d, f, best);
        }
        break;
      }
      return c;
    }
    auto all_uncrossed_deg3 = [&](int w) {
      if (gv.degree[w] != 3) return false;
      for (int e : gv.inc[w])
        if (d.edges[e].crossings != 0) return false;
      return true;
    };
    for (int w : gv.adj[v]) {
      if (all_uncrossed_deg3(w)) {
        c.kind = VertexKind::T3_3Hermit;
        c.partner = w;
        return c;
      }
    }
    c.kind = VertexKind::T3_3Mingler;
    return c;
  }
  if (c.degree == 4) {
    for (int w : gv.adj[v]) {
      if (gv.degree[w] == 2) {
        c.kind = VertexKind::T4H;
        c.partner = w;
        for (int z : gv.adj[w])
          if (z != v) c.anchor = z;
        return c;
      }
    }
    c.kind = VertexKind::Plain4;
    return c;
  }
  c.kind = VertexKind::High;
  return c;
}

std::string vertex_pair(int a, int b) {
  return std::to_string(a) + "-" + std::to_string(b);
}

}  // namespace

const char* vertex_kind_name(VertexKind k) {
  switch (k) {
    case VertexKind::Hermit: return "hermit";
    case VertexKind::T3_1: return "t3-1";
    case VertexKind::T3_2: return "t3-2";
    case VertexKind::T3_3Hermit: return "t3-3-hermit";
    case VertexKind::T3_3Mingler: return "t3-3-mingler";
    case VertexKind::T4H: return "t4-h";
    case VertexKind::Plain4: return "plain-4";
    case VertexKind::High: return "high";
    case VertexKind::Degenerate: return "degenerate";
  }
  return "?";
}

int halfedge_at(const Drawing& d, int edge, int vertex) {
  const DrawingEdge& rec = d.edges[edge];
  if (rec.gu == vertex) return 2 * edge;
  if (rec.gv == vertex) return 2 * edge + 1;
  return -1;
}

int halfedge_vertex(const Drawing& d, int halfedge) {
  const DrawingEdge& rec = d.edges[halfedge / 2];
  return (halfedge & 1) ? rec.gv : rec.gu;
}

int halfedge_other(const Drawing& d, int halfedge) {
  const DrawingEdge& rec = d.edges[halfedge / 2];
  return (halfedge & 1) ? rec.gu : rec.gv;
}

std::string halfedge_name(const Drawing& d, int halfedge) {
  const DrawingEdge& rec = d.edges[halfedge / 2];
  return vertex_pair(rec.gu, rec.gv) + "@" +
         std::to_string(halfedge_vertex(d, halfedge));
}

VertexClass classify_vertex(const Drawing& d, int v) {
  GraphView gv = view_of(d);
  auto xings = crossing_list(d);
  return classify_at(d, gv, xings, v);
}

std::vector<VertexClass> classify_vertices(const Drawing& d) {
  GraphView gv = view_of(d);
  auto xings = crossing_list(d);
  std::vector<VertexClass> out;
  out.reserve(gv.n);
  for (int v = 0; v < gv.n; ++v) out.push_back(classify_at(d, gv, xings, v));
  return out;
}

// ---------------------------------------------------------------------------
// Structural checks

namespace {

void add_check(StructuralReport& rep, PredicateResult r) {
  rep.all_pass = rep.all_pass && r.pass;
  rep.checks.push_back(std::move(r));
}

PredicateResult named(const char* name) {
  PredicateResult r;
  r.name = name;
  return r;
}

void fail(PredicateResult& r, std::string witness) {
  r.pass = false;
  r.witnesses.push_back(std::move(witness));
}

bool connected_without(const GraphView& gv, int skip) {
  int start = -1;
  for (int v = 0; v < gv.n; ++v)
    if (v != skip) {
      start = v;
      break;
    }
  if (start < 0) return true;
  std::vector<char> seen(gv.n, 0);
  std::vector<int> stack{start};
  seen[start] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : gv.adj[v]) {
      if (w == skip || seen[w]) continue;
      seen[w] = 1;
      ++reached;
      stack.push_back(w);
    }
  }
  return reached == gv.n - (skip >= 0 ? 1 : 0);
}

}  // namespace

StructuralReport structural_report(const Drawing& d) {
  GraphView gv = view_of(d);
  auto xings = crossing_list(d);
  std::vector<VertexClass> cls;
  cls.reserve(gv.n);
  for (int v = 0; v < gv.n; ++v) cls.push_back(classify_at(d, gv, xings, v));
  StructuralReport rep;

  {
    PredicateResult r = named("common-face-adjacency");
    FaceSet faces = compute_faces(d);
    for (int f = 0; f < faces.count(); ++f) {
      std::set<int> verts;
      for (int dart : face_boundary(d, faces.start[f])) {
        const DrawingNode& node = d.nodes[d.d_node[dart]];
        if (node.kind == NodeKind::Vertex) verts.insert(node.vertex);
      }
      std::vector<int> vs(verts.begin(), verts.end());
      for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
          ++r.subjects;
          int e = edge_between(d, gv, vs[i], vs[j]);
          if (e < 0)
            fail(r, "face " + std::to_string(f) + ": " +
                        vertex_pair(vs[i], vs[j]) + " not adjacent");
          else if (d.edges[e].crossings != 0)
            fail(r, "face " + std::to_string(f) + ": edge " +
                        vertex_pair(vs[i], vs[j]) + " crossed");
        }
    }
    add_check(rep, std::move(r));
  }

  {
    PredicateResult r = named("uncrossed-edge-everywhere");
    for (int v = 0; v < gv.n; ++v) {
      ++r.subjects;
      bool has = gv.degree[v] == 0;  // vacuous for isolated vertices
      for (int e : gv.inc[v]) has = has || d.edges[e].crossings == 0;
      if (!has) fail(r, "vertex " + std::to_string(v));
    }
    add_check(rep, std::move(r));
  }

  {
    PredicateResult r = named("two-connected");
    if (gv.n >= 3) {
      r.subjects = 1;
      if (!connected_without(gv, -1)) {
        fail(r, "disconnected");
      } else {
        for (int v = 0; v < gv.n; ++v)
          if (!connected_without(gv, v))
            fail(r, "cut vertex " + std::to_string(v));
      }
    }
    add_check(rep, std::move(r));
  }

  {
    PredicateResult r = named("hermit-triangle");
    for (const VertexClass& c : cls) {
      if (c.kind != VertexKind::Hermit) continue;
      ++r.subjects;
      if (c.host_edge < 0) {
        fail(r, "hermit " + std::to_string(c.vertex) +
                    ": neighbors not adjacent");
        continue;
      }
      if (d.edges[c.host_edge].crossings != 0)
        fail(r, "hermit " + std::to_string(c.vertex) + ": host edge crossed");
      for (int e : c.crossed)
        fail(r, "hermit " + std::to_string(c.vertex) + ": own edge " +
                    vertex_pair(d.edges[e].gu, d.edges[e].gv) + " crossed");
    }
    add_check(rep, std::move(r));
  }

  {
    PredicateResult r = named("hermit-per-edge");
    std::map<int, std::vector<int>> hosts;
    for (const VertexClass& c : cls)
      if (c.kind == VertexKind::Hermit && c.host_edge >= 0)
        hosts[c.host_edge].push_back(c.vertex);
    for (const auto& [e, hs] : hosts) {
      ++r.subjects;
      if (hs.size() > 1)
        fail(r, "edge " + vertex_pair(d.edges[e].gu, d.edges[e].gv) +
                    " hosts " + std::to_string(hs.size()) + " hermits");
    }
    add_check(rep, std::move(r));
  }

  {
    PredicateResult r = named("hermit-neighbor-degrees");
    for (const VertexClass& c : cls) {
      if (c.kind != VertexKind::Hermit) continue;
      ++r.subjects;
      for (int w : gv.adj[c.vertex])
        if (gv.degree[w] < 4)
          fail(r, "hermit " + std::to_string(c.vertex) + ": neighbor " +
                      std::to_string(w) + " has degree " +
                      std::to_string(gv.degree[w]));
    }
    add_check(rep, std::move(r));
  }

  {
    PredicateResult r = named("hermit-quota");
    for (int v = 0; v < gv.n; ++v) {
      ++r.subjects;
      int hermits = 0;
      for (int w : gv.adj[v]) hermits += gv.degree[w] == 2;
      if (hermits > gv.degree[v] / 3)
        fail(r, "vertex " + std::to_string(v) + ": " +
                    std::to_string(hermits) + " hermit neighbors at degree " +
                    std::to_string(gv.degree[v]));
    }
    add_check(rep, std::move(r));
  }

  {
    PredicateResult r = named("t4h-structure");
    for (const VertexClass& c : cls) {
      if (c.kind != VertexKind::T4H) continue;
      ++r.subjects;
      std::string who = "t4-h " + std::to_string(c.vertex);
      if (c.anchor < 0 || !adjacent(gv, c.vertex, c.anchor)) {
        fail(r, who + ": not adjacent to the hermit's second neighbor");
        continue;
      }
      for (int w : gv.adj[c.vertex]) {
        if (w == c.partner || w == c.anchor) continue;
        int e = edge_between(d, gv, c.vertex, w);
        if (d.edges[e].crossings != 2)
          fail(r, who + ": edge " + vertex_pair(c.vertex, w) +
                      " not doubly crossed");
      }
      if (gv.degree[c.anchor] < 6)
        fail(r, who + ": second neighbor degree " +
                    std::to_string(gv.degree[c.anchor]));
      if (gv.degree[c.anchor] == 6) {
        int hermits = 0;
        for (int w : gv.adj[c.anchor]) hermits += gv.degree[w] == 2;
        if (hermits != 1)
          fail(r, who + ": degree-6 second neighbor has " +
                      std::to_string(hermits) + " hermit neighbors");
      }
    }
    add_check(rep, std::move(r));
  }

  {
    PredicateResult r = named("t3-1-anchor");
    for (const VertexClass& c : cls) {
      if (c.kind != VertexKind::T3_1) continue;
      ++r.subjects;
      std::string who = "t3-1 " + std::to_string(c.vertex);
      if (gv.degree[c.anchor] < high_degree)
        fail(r, who + ": anchor degree " +
                    std::to_string(gv.degree[c.anchor]));
      auto nbs = rotation_neighbors(d, c.anchor, c.uncrossed[0]);
      for (int e : nbs)
        if (e < 0 || d.edges[e].crossings != 2)
          fail(r, who + ": flanking edge at anchor not doubly crossed");
    }
    add_check(rep, std::move(r));
  }

  {
    PredicateResult r = named("t3-2-crossing");
    for (const VertexClass& c : cls) {
      if (c.kind != VertexKind::T3_2) continue;
      ++r.subjects;
      std::string who = "t3-2 " + std::to_string(c.vertex);
      if (d.edges[c.crossed[0]].crossings != 1)
        fail(r, who + ": crossed edge carries " +
                    std::to_string(d.edges[c.crossed[0]].crossings) +
                    " crossings");
      if (c.crossing_edge < 0 || d.edges[c.crossing_edge].crossings != 2)
        fail(r, who + ": crossing edge not doubly crossed");
      if (c.anchor < 0)
        fail(r, who + ": crossing edge avoids the other neighbors");
    }
    add_check(rep, std::move(r));
  }

  {
    PredicateResult r = named("t3-2-degrees");
    for (const VertexClass& c : cls) {
      if (c.kind != VertexKind::T3_2) continue;
      ++r.subjects;
      std::string who = "t3-2 " + std::to_string(c.vertex);
      if (c.anchor >= 0 && gv.degree[c.anchor] < high_degree)
        fail(r, who + ": anchor degree " +
                    std::to_string(gv.degree[c.anchor]));
      for (int w : gv.adj[c.vertex])
        if (w != c.anchor && gv.degree[w] < 4)
          fail(r, who + ": neighbor " + std::to_string(w) + " has degree " +
                      std::to_string(gv.degree[w]));
    }
    add_check(rep, std::move(r));
  }

  {
    PredicateResult r = named("paired-t3-3");
    for (const VertexClass& c : cls) {
      if (c.kind != VertexKind::T3_3Hermit && c.kind != VertexKind::T3_3Mingler)
        continue;
      ++r.subjects;
      std::string who = std::string(vertex_kind_name(c.kind)) + " " +
                        std::to_string(c.vertex);
      int low_partners = 0;
      for (int w : gv.adj[c.vertex]) {
        if (gv.degree[w] > 3) continue;
        const VertexClass& wc = cls[w];
        if (wc.kind != VertexKind::T3_3Hermit)
          fail(r, who + ": low-degree neighbor " + std::to_string(w) +
                      " is " + vertex_kind_name(wc.kind));
        else
          ++low_partners;
      }
      if (c.kind != VertexKind::T3_3Hermit) continue;
      if (low_partners != 1) {
        fail(r, who + ": " + std::to_string(low_partners) + " partners");
        continue;
      }
      std::vector<int> mine, theirs;
      for (int w : gv.adj[c.vertex])
        if (w != c.partner) mine.push_back(w);
      for (int w : gv.adj[c.partner])
        if (w != c.vertex) theirs.push_back(w);
      if (mine != theirs) {
        fail(r, who + ": neighborhoods differ from partner " +
                    std::to_string(c.partner));
        continue;
      }
      int base = edge_between(d, gv, mine[0], mine[1]);
      if (base < 0 || d.edges[base].crossings != 0)
        fail(r, who + ": common neighbors lack an uncrossed edge");
      for (int w : mine)
        if (gv.degree[w] < high_degree)
          fail(r, who + ": common neighbor " + std::to_string(w) +
                      " has degree " + std::to_string(gv.degree[w]));
    }
    add_check(rep, std::move(r));
  }

  {
    PredicateResult r = named("mingler-degrees");
    for (const VertexClass& c : cls) {
      if (c.kind != VertexKind::T3_3Mingler) continue;
      ++r.subjects;
      std::string who = "t3-3-mingler " + std::to_string(c.vertex);
      int ge5 = 0, ge6 = 0;
      for (int w : gv.adj[c.vertex]) {
        if (gv.degree[w] < 4)
          fail(r, who + ": neighbor " + std::to_string(w) + " has degree " +
                      std::to_string(gv.degree[w]));
        ge5 += gv.degree[w] >= 5;
        ge6 += gv.degree[w] >= 6;
      }
      if (ge6 < 1 && ge5 < 2)
        fail(r, who + ": neighbor degrees too small");
    }
    add_check(rep, std::move(r));
  }

  return rep;
}

// ---------------------------------------------------------------------------
// Charging scheme

bool ClaimLedger::claim(int halfedge, int vertex, ClaimRule rule) {
  if (halfedge < 0 || halfedge >= halfedge_count) return false;
  if (claims[halfedge].claimant != -1) return false;
  claims[halfedge] = Claim{vertex, rule};
  return true;
}

namespace {

void must_claim(const Drawing& d, ClaimLedger& led, int halfedge, int vertex,
                ClaimRule rule) {
  if (halfedge < 0) {
    led.violations.push_back("vertex " + std::to_string(vertex) +
                             ": required halfedge missing");
    return;
  }
  if (!led.claim(halfedge, vertex, rule))
    led.violations.push_back(
        "halfedge " + halfedge_name(d, halfedge) + " claimed by " +
        std::to_string(led.claims[halfedge].claimant) + " and " +
        std::to_string(vertex));
}

// True when the halfedge may be assessed: it sits at a high-degree vertex
// and the far endpoint has degree at least four.
bool assessable(const Drawing& d, const GraphView& gv, int halfedge) {
  return gv.degree[halfedge_vertex(d, halfedge)] >= high_degree &&
         gv.degree[halfedge_other(d, halfedge)] >= 4;
}

}  // namespace

ClaimLedger assessments(const Drawing& d) {
  GraphView gv = view_of(d);
  ClaimLedger led;
  led.halfedge_count = 2 * static_cast<int>(d.edges.size());
  led.claims.assign(led.halfedge_count, Claim{});
  led.classes = classify_vertices(d);

  for (const VertexClass& c : led.classes) {
    switch (c.kind) {
      case VertexKind::Hermit: {
        bool served = false;
        for (int y : gv.adj[c.vertex]) {
          if (gv.degree[y] < high_degree) continue;
          served = true;
          must_claim(d, led, halfedge_at(d, edge_between(d, gv, c.vertex, y), y),
                     c.vertex, ClaimRule::C1);
          if (c.host_edge >= 0)
            must_claim(d, led, halfedge_at(d, c.host_edge, y), c.vertex,
                       ClaimRule::C1);
          else
            led.violations.push_back("hermit " + std::to_string(c.vertex) +
                                     ": no host edge to claim");
        }
        if (!served)
          led.violations.push_back("hermit " + std::to_string(c.vertex) +
                                   ": no high-degree neighbor");
        break;
      }
      case VertexKind::T3_1: {
        int e = c.uncrossed[0];
        must_claim(d, led, halfedge_at(d, e, c.anchor), c.vertex, ClaimRule::C2);
        for (int f : rotation_neighbors(d, c.anchor, e))
          must_claim(d, led, f < 0 ? -1 : halfedge_at(d, f, c.anchor), c.vertex,
                     ClaimRule::C2);
        break;
      }
      case VertexKind::T4H: {
        int e = edge_between(d, gv, c.vertex, c.anchor);
        if (e < 0) {
          led.violations.push_back("t4-h " + std::to_string(c.vertex) +
                                   ": no edge to the hermit's second neighbor");
          break;
        }
        for (int f : rotation_neighbors(d, c.anchor, e))
          must_claim(d, led, f < 0 ? -1 : halfedge_at(d, f, c.anchor), c.vertex,
                     ClaimRule::C3);
        break;
      }
      case VertexKind::T3_3Hermit: {
        if (c.partner < c.vertex) break;  // handled from the smaller end
        std::vector<int> common;
        for (int w : gv.adj[c.vertex])
          if (w != c.partner) common.push_back(w);
        if (common.size() != 2 || !adjacent(gv, c.partner, common[0]) ||
            !adjacent(gv, c.partner, common[1])) {
          led.violations.push_back("paired t3-3 " + std::to_string(c.vertex) +
                                   "," + std::to_string(c.partner) +
                                   ": neighborhoods differ");
          break;
        }
        // The smaller of the pair claims at the smaller common neighbor.
        int pair_v[2] = {c.vertex, c.partner};
        for (int i = 0; i < 2; ++i) {
          int z = pair_v[i], a = common[i];
          must_claim(d, led,
                     halfedge_at(d, edge_between(d, gv, z, a), a), z,
                     ClaimRule::C2);
          must_claim(d, led,
                     halfedge_at(d, edge_between(d, gv, pair_v[1 - i], a), a),
                     z, ClaimRule::C2);
          int base = edge_between(d, gv, common[0], common[1]);
          must_claim(d, led, base < 0 ? -1 : halfedge_at(d, base, a), z,
                     ClaimRule::C2);
        }
        break;
      }
      case VertexKind::T3_2: {
        T32Assessment a;
        a.vertex = c.vertex;
        a.anchor = c.anchor;
        if (c.anchor < 0) {
          led.violations.push_back("t3-2 " + std::to_string(c.vertex) +
                                   ": anchor unidentified");
          led.t32.push_back(std::move(a));
          break;
        }
        int e_uw = edge_between(d, gv, c.vertex, c.anchor);
        must_claim(d, led, e_uw < 0 ? -1 : halfedge_at(d, e_uw, c.anchor),
                   c.vertex, ClaimRule::T3_2);
        must_claim(d, led,
                   c.crossing_edge < 0
                       ? -1
                       : halfedge_at(d, c.crossing_edge, c.anchor),
                   c.vertex, ClaimRule::T3_2);
        for (int y : gv.adj[c.vertex]) {
          if (y == c.anchor) continue;
          int e = edge_between(d, gv, y, c.anchor);
          if (e < 0) continue;
          int h = halfedge_at(d, e, c.anchor);
          if (!assessable(d, gv, h)) continue;
          if (d.edges[e].crossings != 0)
            led.violations.push_back("t3-2 " + std::to_string(c.vertex) +
                                     ": assessed edge " +
                                     vertex_pair(y, c.anchor) + " crossed");
          a.options.push_back(h);
        }
        std::sort(a.options.begin(), a.options.end(),
                  [&](int x, int y) {
                    return halfedge_other(d, x) < halfedge_other(d, y);
                  });
        led.t32.push_back(std::move(a));
        break;
      }
      case VertexKind::T3_3Mingler: {
        T33Assessment a;
        a.vertex = c.vertex;
        const std::vector<int>& nb = gv.adj[c.vertex];
        for (std::size_t i = 0; i < nb.size(); ++i)
          for (std::size_t j = i + 1; j < nb.size(); ++j) {
            int e = edge_between(d, gv, nb[i], nb[j]);
            if (e < 0) continue;
            for (int h : {2 * e, 2 * e + 1})
              if (assessable(d, gv, h)) a.assessed.push_back(h);
          }
        std::sort(a.assessed.begin(), a.assessed.end());
        led.t33.push_back(std::move(a));
        break;
      }
      default:
        break;
    }
  }
  return led;
}

namespace {

// Resolution state shared by the greedy phases.
struct Resolver {
  const Drawing& d;
  GraphView gv;
  ClaimLedger& led;
  std::vector<char> done_t32, done_t33;

  explicit Resolver(const Drawing& dd, ClaimLedger& l)
      : d(dd), gv(view_of(dd)), led(l),
        done_t32(l.t32.size(), 0), done_t33(l.t33.size(), 0) {}

  bool assesses_t33(int i, int h) const {
    const auto& a = led.t33[i].assessed;
    return std::binary_search(a.begin(), a.end(), h);
  }

  // The unresolved vertex other than `except` that assesses h, as
  // (is_mingler, index), or (-1, -1).
  std::pair<int, int> other_assessor(int h, int except) const {
    for (std::size_t i = 0; i < led.t32.size(); ++i) {
      if (done_t32[i] || led.t32[i].vertex == except) continue;
      const auto& o = led.t32[i].options;
      if (std::find(o.begin(), o.end(), h) != o.end())
        return {0, static_cast<int>(i)};
    }
    for (std::size_t i = 0; i < led.t33.size(); ++i) {
      if (done_t33[i] || led.t33[i].vertex == except) continue;
      if (assesses_t33(static_cast<int>(i), h))
        return {1, static_cast<int>(i)};
    }
    return {-1, -1};
  }

  void violation(std::string s) { led.violations.push_back(std::move(s)); }

  // Lets mingler i claim its pair plus own halfedge at anchor a; true on
  // success.  `via_b` is the neighbor whose edge to the anchor supplies one
  // half of the pair; the third neighbor supplies the other.
  bool mingler_claim_at(int i, int a, int* continue_from) {
    T33Assessment& t = led.t33[i];
    int u = t.vertex;
    if (a < 0 || gv.degree[a] < high_degree) return false;
    std::vector<int> pair_halves;
    for (int w : gv.adj[u]) {
      if (w == a) continue;
      int e = edge_between(d, gv, w, a);
      if (e < 0) return false;
      int h = halfedge_at(d, e, a);
      if (!assesses_t33(i, h) || led.claims[h].claimant != -1) return false;
      pair_halves.push_back(h);
    }
    int own_edge = edge_between(d, gv, u, a);
    int own = own_edge < 0 ? -1 : halfedge_at(d, own_edge, a);
    if (own < 0 || led.claims[own].claimant != -1 || pair_halves.size() != 2)
      return false;
    led.claim(own, u, ClaimRule::T3_3);
    for (int h : pair_halves) led.claim(h, u, ClaimRule::T3_3);
    t.anchor = a;
    t.chosen = pair_halves;
    done_t33[i] = 1;
    if (continue_from) *continue_from = pair_halves.back();
    return true;
  }

  // Follows contested claims: each claimed halfedge forces the unique other
  // assessor to settle its own claims next.
  void chain_from(int h, int claimant) {
    while (h >= 0) {
      auto [kind, idx] = other_assessor(h, claimant);
      if (kind < 0) return;
      if (kind == 0) {
        T32Assessment& t = led.t32[idx];
        int next = -1;
        for (int o : t.options)
          if (o != h) next = o;
        done_t32[idx] = 1;
        if (next < 0) {
          violation("t3-2 " + std::to_string(t.vertex) +
                    ": lone option already claimed");
          return;
        }
        if (!led.claim(next, t.vertex, ClaimRule::T3_2)) {
          violation("t3-2 " + std::to_string(t.vertex) +
                    ": forced option already claimed");
          return;
        }
        t.chosen = next;
        claimant = t.vertex;
        h = next;
        continue;
      }
      // A mingler follows up at the claimed halfedge's far endpoint; its
      // second pair half keeps the chain going.  When that anchor is not
      // available the mingler simply waits for the later phases.
      int a = halfedge_other(d, h);
      int cont = -1;
      if (!mingler_claim_at(idx, a, &cont)) return;
      claimant = led.t33[idx].vertex;
      h = cont;
      // Only continue while the halfedge is still contested.
      if (other_assessor(h, claimant).first < 0) return;
    }
  }

  // --- tricky-mingler machinery ---

  bool contested_among(const std::vector<int>& pool, int h, int except) const {
    for (int i : pool)
      if (led.t33[i].vertex != except && assesses_t33(i, h)) return true;
    return false;
  }

  bool tricky(const std::vector<int>& pool, int i) const {
    const T33Assessment& t = led.t33[i];
    if (t.assessed.size() != 6) return false;
    const std::vector<int>& nb = gv.adj[t.vertex];
    if (nb.size() != 3) return false;
    int v = nb[0], w = nb[1], x = nb[2];
    auto half = [&](int from, int at) {
      return halfedge_at(d, edge_between(d, gv, from, at), at);
    };
    int cyc_a[3] = {half(v, w), half(w, x), half(x, v)};
    int cyc_b[3] = {half(v, x), half(x, w), half(w, v)};
    auto all_contested = [&](const int* cyc) {
      for (int k = 0; k < 3; ++k)
        if (!contested_among(pool, cyc[k], t.vertex)) return false;
      return true;
    };
    return all_contested(cyc_a) || all_contested(cyc_b);
  }

  // Removes the not-tricky members of the pool until stable.
  void shed_easy(std::vector<int>& pool) {
    bool changed = true;
    while (changed) {
      changed = false;
      std::vector<int> keep;
      for (int i : pool)
        if (tricky(pool, i))
          keep.push_back(i);
        else
          changed = true;
      pool.swap(keep);
    }
  }

  // Builds the cyclic sequence of pool members around v that starts at
  // member i; empty when the walk does not close.
  std::vector<int> cycle_around(const std::vector<int>& pool, int i, int v) {
    const T33Assessment& t = led.t33[i];
    std::vector<int> others;
    for (int w : gv.adj[t.vertex])
      if (w != v) others.push_back(w);
    if (others.size() != 2 || !adjacent(gv, t.vertex, v)) return {};
    int close_edge = edge_between(d, gv, others[0], v);
    int walk_edge = edge_between(d, gv, others[1], v);
    if (close_edge < 0 || walk_edge < 0) return {};
    std::vector<int> members{i};
    int cur = i, e = walk_edge;
    for (int guard = 0; guard <= gv.n; ++guard) {
      int next = -1;
      for (int j : pool) {
        if (j == cur || led.t33[j].vertex == led.t33[cur].vertex) continue;
        int h = halfedge_at(d, e, v);
        if (assesses_t33(j, h)) {
          next = j;
          break;
        }
      }
      if (next < 0) return {};
      if (next == i) return e == close_edge ? members : std::vector<int>{};
      if (std::find(members.begin(), members.end(), next) != members.end())
        return {};
      members.push_back(next);
      // advance: the next member's other edge at v keeps the walk going
      int far = -1;
      for (int w : gv.adj[led.t33[next].vertex]) {
        if (w == v) continue;
        int e2 = edge_between(d, gv, w, v);
        if (e2 >= 0 && e2 != e) far = e2;
      }
      if (far < 0) return {};
      cur = next;
      e = far;
    }
    return {};
  }

  // Claims for a closed cycle of tricky minglers around v per the even or
  // odd schedule; returns the members that claimed.
  void resolve_cycle(const std::vector<int>& members, int v) {
    int k = static_cast<int>(members.size());
    int last = k - 1;
    for (int idx = 0; idx < k; idx += 2) {
      if (k % 2 == 1 && idx == last) break;  // the odd tail claims elsewhere
      if (!mingler_claim_at(members[idx], v, nullptr))
        violation("mingler " + std::to_string(led.t33[members[idx]].vertex) +
                  ": scheduled pair at " + std::to_string(v) + " blocked");
    }
    if (k % 2 == 0) return;
    // Odd case: the last member claims at the closing edge's far endpoint,
    // and the possibly contested second half starts a follow-up chain.
    int i = members[last];
    const T33Assessment& t = led.t33[i];
    std::vector<int> others;
    for (int w : gv.adj[t.vertex])
      if (w != v) others.push_back(w);
    int x_k = others[0];  // far end of the edge shared with the first member
    int cont = -1;
    if (!mingler_claim_at(i, x_k, &cont)) {
      violation("mingler " + std::to_string(t.vertex) +
                ": odd-cycle pair at " + std::to_string(x_k) + " blocked");
      return;
    }
    chain_from(cont, t.vertex);
  }
};

}  // namespace

ClaimLedger resolve_claims(const Drawing& d, ClaimLedger ledger) {
  Resolver rs(d, ledger);

  // Every edge may be assessed by at most two vertices; a third assessor is
  // a structural violation that the resolution surfaces but works around.
  {
    std::map<int, std::set<int>> assessors;
    for (const auto& t : ledger.t32)
      for (int h : t.options) assessors[h / 2].insert(t.vertex);
    for (const auto& t : ledger.t33)
      for (int h : t.assessed) assessors[h / 2].insert(t.vertex);
    for (const auto& [e, vs] : assessors)
      if (vs.size() > 2) {
        std::string w = "edge " +
                        vertex_pair(d.edges[e].gu, d.edges[e].gv) +
                        " assessed by";
        for (int v : vs) w += " " + std::to_string(v);
        rs.violation(w);
      }
  }

  // Greedy chains started at each unresolved two-uncrossed vertex.
  for (std::size_t i = 0; i < ledger.t32.size(); ++i) {
    if (rs.done_t32[i]) continue;
    T32Assessment& t = ledger.t32[i];
    rs.done_t32[i] = 1;
    int pick = -1;
    for (int o : t.options)
      if (ledger.claims[o].claimant == -1 && (pick == -1 ||
          halfedge_other(d, o) < halfedge_other(d, pick)))
        pick = o;
    if (pick < 0) {
      rs.violation("t3-2 " + std::to_string(t.vertex) + ": no open option");
      continue;
    }
    ledger.claim(pick, t.vertex, ClaimRule::T3_2);
    t.chosen = pick;
    rs.chain_from(pick, t.vertex);
  }

  // Cycles of tricky minglers around a shared high-degree vertex.
  std::vector<int> pool;
  for (std::size_t i = 0; i < ledger.t33.size(); ++i)
    if (!rs.done_t33[i]) pool.push_back(static_cast<int>(i));
  rs.shed_easy(pool);
  while (!pool.empty()) {
    int i = pool.front();
    bool advanced = false;
    for (int v : rs.gv.adj[ledger.t33[i].vertex]) {
      std::vector<int> members = rs.cycle_around(pool, i, v);
      if (members.empty()) continue;
      rs.resolve_cycle(members, v);
      advanced = true;
      break;
    }
    if (!advanced) {
      rs.violation("mingler " + std::to_string(ledger.t33[i].vertex) +
                   ": tricky but no closing cycle");
      pool.erase(pool.begin());
      continue;
    }
    std::vector<int> rest;
    for (int j : pool)
      if (!rs.done_t33[j]) rest.push_back(j);
    pool.swap(rest);
    rs.shed_easy(pool);
  }

  // Remaining easy minglers, resolved last.  Greedy order can starve a late
  // mingler even when choices exist, so search the anchor combinations
  // exactly, smallest anchors first; the first complete assignment wins.
  std::vector<int> remaining;
  for (std::size_t i = 0; i < ledger.t33.size(); ++i)
    if (!rs.done_t33[i]) remaining.push_back(static_cast<int>(i));
  std::function<bool(std::size_t)> settle = [&](std::size_t p) -> bool {
    if (p == remaining.size()) return true;
    int i = remaining[p];
    T33Assessment& t = ledger.t33[i];
    for (int a : rs.gv.adj[t.vertex]) {
      if (!rs.mingler_claim_at(i, a, nullptr)) continue;
      if (settle(p + 1)) return true;
      for (int h : t.chosen) ledger.claims[h] = Claim{};
      int own_edge = edge_between(d, rs.gv, t.vertex, a);
      ledger.claims[halfedge_at(d, own_edge, a)] = Claim{};
      t.anchor = -1;
      t.chosen.clear();
      rs.done_t33[i] = 0;
    }
    return false;
  };
  if (remaining.size() > 20 || !settle(0)) {
    for (int i : remaining) {
      if (rs.done_t33[i]) continue;
      bool okay = false;
      for (int a : rs.gv.adj[ledger.t33[i].vertex])
        if (rs.mingler_claim_at(i, a, nullptr)) {
          okay = true;
          break;
        }
      if (!okay)
        rs.violation("mingler " + std::to_string(ledger.t33[i].vertex) +
                     ": no open pair at any high-degree neighbor");
    }
  }

  ledger.resolved = true;
  return ledger;
}

LedgerCheck check_ledger(const Drawing& d, const ClaimLedger& ledger) {
  GraphView gv = view_of(d);
  LedgerCheck out;
  out.no_violations = ledger.violations.empty();
  for (const std::string& v : ledger.violations)
    out.witnesses.push_back("violation: " + v);

  // Claims per claimant, grouped by the vertex the halfedge sits at.
  std::map<int, std::map<int, int>> at;
  for (int h = 0; h < ledger.halfedge_count; ++h) {
    int c = ledger.claims[h].claimant;
    if (c >= 0) at[c][halfedge_vertex(d, h)] += 1;
  }
  auto total = [&](int v) {
    int sum = 0;
    for (const auto& [w, k] : at[v]) sum += k;
    return sum;
  };

  for (const VertexClass& c : ledger.classes) {
    bool ok = true;
    switch (c.kind) {
      case VertexKind::Hermit: {
        int expect = 0;
        for (int y : gv.adj[c.vertex])
          if (gv.degree[y] >= high_degree) {
            expect += 2;
            if (at[c.vertex][y] != 2) ok = false;
          }
        ok = ok && expect > 0 && total(c.vertex) == expect;
        break;
      }
      case VertexKind::T3_1:
      case VertexKind::T3_2:
      case VertexKind::T3_3Hermit:
      case VertexKind::T3_3Mingler: {
        ok = total(c.vertex) == 3 && at[c.vertex].size() == 1 &&
             gv.degree[at[c.vertex].begin()->first] >= high_degree;
        break;
      }
      case VertexKind::T4H: {
        ok = total(c.vertex) == 2 && at[c.vertex].size() == 1;
        break;
      }
      default:
        ok = total(c.vertex) == 0;
        break;
    }
    if (!ok) {
      out.quotas_met = false;
      out.witnesses.push_back(std::string("quota: ") +
                              vertex_kind_name(c.kind) + " " +
                              std::to_string(c.vertex) + " claims " +
                              std::to_string(total(c.vertex)) + " halfedges");
    }
  }

  std::map<int, std::set<int>> assessors;
  for (const auto& t : ledger.t32)
    for (int h : t.options) assessors[h / 2].insert(t.vertex);
  for (const auto& t : ledger.t33)
    for (int h : t.assessed) assessors[h / 2].insert(t.vertex);
  for (const auto& [e, vs] : assessors)
    if (vs.size() > 2) {
      out.assessors_ok = false;
      out.witnesses.push_back(
          "assessors: edge " + vertex_pair(d.edges[e].gu, d.edges[e].gv) +
          " has " + std::to_string(vs.size()));
    }

  std::map<int, std::set<int>> low_claimants;  // degree-5 vertex -> claimants
  for (int h = 0; h < ledger.halfedge_count; ++h) {
    int c = ledger.claims[h].claimant;
    if (c < 0) continue;
    int v = halfedge_vertex(d, h);
    if (gv.degree[v] == 5 && gv.degree[c] <= 3) low_claimants[v].insert(c);
  }
  for (const auto& [v, cs] : low_claimants)
    if (cs.size() > 1) {
      out.degree5_rule = false;
      out.witnesses.push_back("degree-5 vertex " + std::to_string(v) +
                              " serves " + std::to_string(cs.size()) +
                              " low-degree claimants");
    }

  return out;
}

// ---------------------------------------------------------------------------
// Degree counts and inequalities

DegreeProfile degree_profile(const Drawing& d) {
  GraphView gv = view_of(d);
  DegreeProfile p;
  int maxdeg = 0;
  for (int v = 0; v < gv.n; ++v) {
    if (d.vertex_node[v] < 0 && gv.degree[v] == 0) continue;
    ++p.n;
    maxdeg = std::max(maxdeg, gv.degree[v]);
  }
  for (const DrawingEdge& rec : d.edges) p.m += !rec.artifact && rec.gu >= 0;
  p.by_degree.assign(maxdeg + 1, 0);
  p.refined.assign(maxdeg + 1, {});
  for (int v = 0; v < gv.n; ++v) {
    if (d.vertex_node[v] < 0 && gv.degree[v] == 0) continue;
    int deg = gv.degree[v];
    int hermits = 0;
    for (int w : gv.adj[v]) hermits += gv.degree[w] == 2;
    p.by_degree[deg] += 1;
    if (static_cast<int>(p.refined[deg].size()) <= hermits)
      p.refined[deg].resize(hermits + 1, 0);
    p.refined[deg][hermits] += 1;
  }
  return p;
}

InequalityReport degree_inequalities(const Drawing& d) {
  InequalityReport rep;
  rep.profile = degree_profile(d);
  const DegreeProfile& p = rep.profile;
  auto v = [&](int i) {
    return i < static_cast<int>(p.by_degree.size()) ? p.by_degree[i] : 0;
  };
  auto r = [&](int i, int j) {
    if (i >= static_cast<int>(p.refined.size())) return 0;
    const auto& row = p.refined[i];
    return j < static_cast<int>(row.size()) ? row[j] : 0;
  };

  long long degsum = 0;
  for (int i = 0; i < static_cast<int>(p.by_degree.size()); ++i)
    degsum += static_cast<long long>(i) * v(i);
  rep.handshake_ok = degsum == 2LL * p.m;

  rep.refinement_ok = true;
  for (int i = 0; i < static_cast<int>(p.by_degree.size()); ++i) {
    int sum = 0;
    for (int c : p.refined[i]) sum += c;
    rep.refinement_ok = rep.refinement_ok && sum == v(i);
  }

  long long weighted = 0;  // sum (i - 4) v_i
  for (int i = 0; i < static_cast<int>(p.by_degree.size()); ++i)
    weighted += static_cast<long long>(i - 4) * v(i);
  rep.identity_ok = 2LL * (p.m - 2LL * p.n) == weighted;

  long long tail = 0;  // floor(i/3) v_i for degree ten and up
  for (int i = 10; i < static_cast<int>(p.by_degree.size()); ++i)
    tail += static_cast<long long>(i / 3) * v(i);

  {
    InequalityCheck c;
    c.name = "hermit-capacity";
    c.lhs = 2.0 * v(2);
    c.rhs = r(4, 1) + r(5, 1) + r(6, 1) + 2 * r(6, 2) + r(7, 1) + 2 * r(7, 2) +
            2 * v(8) + r(9, 1) + 2 * r(9, 2) + 3 * r(9, 3) +
            static_cast<double>(tail);
    c.holds = c.rhs - c.lhs >= 0;
    rep.checks.push_back(c);
  }
  {
    InequalityCheck c;
    c.name = "triple-capacity";
    c.lhs = v(3) + r(4, 1);
    c.rhs = r(5, 0) + 2 * r(6, 0) + r(6, 1) + 2 * r(7, 0) + 2 * r(7, 1) +
            r(7, 2) + 2 * v(8) + 3 * r(9, 0) + 2 * r(9, 1) + 2 * r(9, 2) +
            r(9, 3) + static_cast<double>(tail);
    c.holds = c.rhs - c.lhs >= 0;
    rep.checks.push_back(c);
  }
  {
    InequalityCheck c;
    c.name = "combined-capacity";
    long long lhs2 = 2LL * v(2) + v(3);
    long long rhs2 = v(5) + 2LL * v(6) + 3LL * v(7) + 4LL * v(8) +
                     4LL * v(9) + 2 * tail;
    c.lhs = lhs2 / 2.0;
    c.rhs = rhs2 / 2.0;
    c.holds = rhs2 - lhs2 >= 0;
    rep.checks.push_back(c);
  }

  rep.all_hold = rep.handshake_ok && rep.refinement_ok && rep.identity_ok;
  for (const InequalityCheck& c : rep.checks) rep.all_hold &= c.holds;
  if (!rep.all_hold)
    rep.note = "capacity violated: the graph is not maximal or the drawing "
               "not admissible";
  return rep;
}

// ---------------------------------------------------------------------------
// Admissible drawings

AdmissibleSet admissible_drawings(const LabeledGraph& g,
                                  std::uint64_t max_expansions) {
  AdmissibleSet out;
  if (g.m() == 0 || !g.connected()) return out;

  auto order = edge_insertion_order(g);
  Drawing d = init_drawing(g, order[0]);
  d.k = 2;
  for (auto& e : d.edges) {
    e.budget = static_cast<std::int8_t>(2 - e.fake);
    if (e.budget < 0) e.budget = 0;
  }
  std::vector<int> rest(order.begin() + 1, order.end());

  int best_cr = INT_MAX, best_dc = INT_MAX;
  int cr = 0, dc = 0;
  std::map<std::string, Drawing> kept;

  std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
    if (cr > best_cr || (cr == best_cr && dc > best_dc)) return true;
    FaceSet faces = compute_faces(d);
    if (d.node_count() - d.dart_count() / 2 + faces.count() != 2) return true;
    if (i == rest.size()) {
      if (cr < best_cr || (cr == best_cr && dc < best_dc)) {
        best_cr = cr;
        best_dc = dc;
        kept.clear();
      }
      kept.emplace(labeled_key(d), d);
      return true;
    }
    auto plans = insertion_plans(d, faces, rest[i]);
    for (const auto& pl : plans) {
      if (max_expansions && out.expansions >= max_expansions) {
        out.inconclusive = true;
        return false;
      }
      out.expansions += 1;
      AppliedPlan a = apply_plan(d, pl);
      int delta_dc = pl.ncross == 2;
      for (int s = 0; s < a.nsplit; ++s)
        delta_dc += d.edges[a.splits[s].edge_a].crossings == 2;
      cr += pl.ncross;
      dc += delta_dc;
      bool go_on = rec(i + 1);
      cr -= pl.ncross;
      dc -= delta_dc;
      undo_plan(d, a);
      if (!go_on) return false;
    }
    return true;
  };
  rec(0);

  out.crossings = best_cr == INT_MAX ? -1 : best_cr;
  out.doubly_crossed = best_dc == INT_MAX ? -1 : best_dc;
  for (auto& [key, drawing] : kept) {
    out.keys.push_back(key);
    out.drawings.push_back(std::move(drawing));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Verdicts and the whole-graph audit

DensityVerdict density_verdict(const LabeledGraph& g,
                               std::uint64_t max_expansions, int threads) {
  DensityVerdict v;
  v.n = g.n();
  v.m = g.m();
  v.margin = v.m - 2 * v.n;
  if (v.n < 5) {
    v.note = "needs at least five vertices";
    return v;
  }
  v.maximal = graph_maximal(g, 2, max_expansions, threads);
  if (v.maximal == TriState::Unknown) {
    v.note = "maximality check ran out of budget";
    return v;
  }
  if (v.maximal == TriState::No) {
    v.note = "graph is not maximal; the bound is not asserted";
    return v;
  }
  v.outcome = v.margin >= 0 ? Verdict::Pass : Verdict::Fail;
  return v;
}

RerouteCheck t32_reroute_check(const AdmissibleSet& adm) {
  RerouteCheck out;
  std::vector<std::vector<VertexClass>> cls;
  cls.reserve(adm.drawings.size());
  for (const Drawing& d : adm.drawings) cls.push_back(classify_vertices(d));

  auto shows = [&](int u, int crossed_edge) {
    for (const auto& dc : cls)
      for (const VertexClass& c : dc)
        if (c.vertex == u && c.kind == VertexKind::T3_2 &&
            c.crossed[0] == crossed_edge)
          return true;
    return false;
  };

  for (std::size_t i = 0; i < adm.drawings.size(); ++i) {
    const Drawing& d = adm.drawings[i];
    GraphView gv = view_of(d);
    for (const VertexClass& c : cls[i]) {
      if (c.kind != VertexKind::T3_2) continue;
      ++out.checked;
      if (c.anchor < 0) {
        out.ok = false;
        out.witnesses.push_back("drawing " + std::to_string(i) + ": t3-2 " +
                                std::to_string(c.vertex) +
                                " has no identified anchor");
        continue;
      }
      int alternate = -1;
      for (int e : c.uncrossed)
        if (other_end(d, e, c.vertex) != c.anchor) alternate = e;
      bool found = alternate >= 0 && shows(c.vertex, alternate);
      if (!found && c.far_end >= 0 && adjacent(gv, c.vertex, c.far_end)) {
        // The crossing edge joins two neighbors; either end may anchor.
        for (int e : c.uncrossed)
          if (other_end(d, e, c.vertex) == c.anchor)
            found = shows(c.vertex, e);
      }
      if (!found) {
        out.ok = false;
        out.witnesses.push_back("drawing " + std::to_string(i) + ": t3-2 " +
                                std::to_string(c.vertex) +
                                " has no rerouted companion drawing");
      }
    }
  }
  return out;
}

GraphAudit audit_graph(const LabeledGraph& g, const AuditOptions& opt) {
  GraphAudit ga;
  ga.admissible = admissible_drawings(g, opt.max_expansions);
  ga.clean = !ga.admissible.inconclusive && !ga.admissible.drawings.empty();

  std::size_t count = ga.admissible.drawings.size();
  if (!opt.all_admissible && count > 1) count = 1;
  ga.drawings.resize(count);

  auto audit_one = [&](std::size_t i) {
    const Drawing& d = ga.admissible.drawings[i];
    DrawingAudit& da = ga.drawings[i];
    da.structure = structural_report(d);
    da.ledger = resolve_claims(d, assessments(d));
    da.ledger_check = check_ledger(d, da.ledger);
    da.inequalities = degree_inequalities(d);
  };

  if (opt.threads > 1 && count > 1) {
    std::vector<std::thread> ts;
    std::size_t per = (count + opt.threads - 1) / opt.threads;
    for (int t = 0; t < opt.threads; ++t) {
      std::size_t lo = t * per, hi = std::min(count, lo + per);
      if (lo >= hi) break;
      ts.emplace_back([&, lo, hi]() {
        for (std::size_t i = lo; i < hi; ++i) audit_one(i);
      });
    }
    for (auto& t : ts) t.join();
  } else {
    for (std::size_t i = 0; i < count; ++i) audit_one(i);
  }

  for (const DrawingAudit& da : ga.drawings)
    ga.clean = ga.clean && da.structure.all_pass && da.ledger_check.all() &&
               da.inequalities.all_hold;

  ga.reroute = t32_reroute_check(ga.admissible);
  ga.clean = ga.clean && ga.reroute.ok;

  if (opt.with_density) {
    ga.density = density_verdict(g, opt.density_expansions, opt.threads);
    ga.clean = ga.clean && ga.density.outcome == Verdict::Pass;
  }
  return ga;
}

}  // namespace kplane
