#include "kplane/search.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <thread>

#include "kplane/canonical.hpp"

namespace kplane {

std::vector<InsertionPlan> insertion_plans(const Drawing& d, const FaceSet& faces,
                                           int edge,
                                           const std::vector<char>* tag_allowed) {
  const DrawingEdge& rec = d.edges[edge];
  if (rec.drawn) throw std::logic_error("insertion_plans: edge already drawn");
  int gu = rec.gu, gv = rec.gv;
  int un = d.vertex_node[gu];
  int vn = d.vertex_node[gv];
  int source = gu;
  if (un < 0) {
    std::swap(un, vn);
    std::swap(gu, gv);
    source = gu;
  }
  if (un < 0) throw std::logic_error("insertion_plans: neither endpoint placed");

  std::vector<std::vector<int>> face_darts(faces.count());
  for (int x = 0; x < d.dart_count(); ++x) face_darts[faces.face_of[x]].push_back(x);

  auto crossable = [&](int x, const InsertionPlan& p) {
    int ex = d.d_edge[x];
    if (ex == edge) return false;
    for (int i = 0; i < p.ncross; ++i)
      if (d.d_edge[p.crossed[i]] == ex) return false;
    const DrawingEdge& er = d.edges[ex];
    if (er.budget < 1) return false;
    if (er.gu >= 0 && (er.gu == gu || er.gu == gv)) return false;
    if (er.gv >= 0 && (er.gv == gu || er.gv == gv)) return false;
    if (er.from_node == un || er.to_node == un) return false;
    if (vn >= 0 && (er.from_node == vn || er.to_node == vn)) return false;
    return true;
  };

  std::vector<InsertionPlan> plans;
  auto emit = [&](InsertionPlan p, int face) {
    p.face_tags[p.ncross] = d.d_tag[faces.start[face]];
    if (vn >= 0) {
      for (int dv : d.rotation(vn))
        if (faces.face_of[dv] == face) {
          p.landing = dv;
          plans.push_back(p);
        }
    } else {
      int tag = p.face_tags[p.ncross];
      if (tag_allowed) {
        if (tag < 0 || tag >= static_cast<int>(tag_allowed->size()) ||
            !(*tag_allowed)[tag])
          return;
      }
      p.landing = -1;
      plans.push_back(p);
    }
  };

  int cap = rec.budget;
  std::function<void(InsertionPlan&, int)> extend = [&](InsertionPlan& p, int face) {
    emit(p, face);
    if (p.ncross >= cap || p.ncross >= 2) return;
    for (int x : face_darts[face]) {
      if (!crossable(x, p)) continue;
      p.crossed[p.ncross] = x;
      p.face_tags[p.ncross] = d.d_tag[faces.start[face]];
      p.ncross += 1;
      extend(p, faces.face_of[d.d_twin[x]]);
      p.ncross -= 1;
      p.crossed[p.ncross] = -1;
    }
  };

  for (int cu : d.rotation(un)) {
    InsertionPlan p;
    p.edge = edge;
    p.source_vertex = source;
    p.corner_u = cu;
    extend(p, faces.face_of[cu]);
  }
  return plans;
}

AppliedPlan apply_plan(Drawing& d, const InsertionPlan& p) {
  AppliedPlan a;
  a.edge = p.edge;
  a.darts0 = d.dart_count();
  a.nodes0 = d.node_count();
  DrawingEdge& rec = d.edges[p.edge];
  int un = d.d_node[p.corner_u];
  int r = p.ncross;

  int chi[2], back_to_a[2], on_to_b[2];
  for (int i = 0; i < r; ++i) {
    int x = p.crossed[i];
    int t = d.d_twin[x];
    int ea = d.d_edge[x];
    int c = d.new_node(NodeKind::Crossing);
    d.nodes[c].cross = {ea, p.edge};
    // Segment of x ran A->B; after the split x keeps A->chi and t keeps
    // B->chi, with fresh darts from chi back out.
    int n1 = d.new_dart(c, ea, d.d_tag[t]);  // chi -> A, left side matches t's
    int n2 = d.new_dart(c, ea, d.d_tag[x]);  // chi -> B, left side matches x's
    d.set_twins(x, n1);
    d.set_twins(n2, t);
    DrawingEdge& ra = d.edges[ea];
    int slot = -1;
    bool forward = true;
    for (int s = 0; s < static_cast<int>(ra.chain.size()); ++s) {
      if (ra.chain[s] == x) {
        slot = s;
        forward = true;
        break;
      }
      if (ra.chain[s] == t) {
        slot = s;
        forward = false;
        break;
      }
    }
    if (slot < 0) throw std::logic_error("apply_plan: crossed dart not on its chain");
    a.splits[a.nsplit++] = {ea, slot, ra.chain[slot], x, t};
    ra.chain.insert(ra.chain.begin() + slot + 1, forward ? n2 : n1);
    ra.budget -= 1;
    ra.crossings += 1;
    chi[i] = c;
    back_to_a[i] = n1;
    on_to_b[i] = n2;
  }

  int target = (p.source_vertex == rec.gu) ? rec.gv : rec.gu;
  int vnode;
  if (p.landing >= 0) {
    vnode = d.d_node[p.landing];
  } else {
    vnode = d.new_node(NodeKind::Vertex, target);
    d.ensure_vertex_slot(target);
    d.vertex_node[target] = vnode;
    a.placed_vertex = target;
  }

  int pts[4];
  pts[0] = un;
  for (int i = 0; i < r; ++i) pts[i + 1] = chi[i];
  pts[r + 1] = vnode;
  int fwd[3], bwd[3];
  for (int i = 0; i <= r; ++i) {
    fwd[i] = d.new_dart(pts[i], p.edge, p.face_tags[i]);
    bwd[i] = d.new_dart(pts[i + 1], p.edge, p.face_tags[i]);
    d.set_twins(fwd[i], bwd[i]);
  }

  // Counterclockwise around a crossing.  The route reaches the crossed dart
  // from the face on its right, so onward along the crossed edge, forward
  // along the route, back along the crossed edge, back along the route.
  for (int i = 0; i < r; ++i) {
    int cyc[4] = {on_to_b[i], fwd[i + 1], back_to_a[i], bwd[i]};
    for (int j = 0; j < 4; ++j) {
      d.d_next[cyc[j]] = cyc[(j + 1) % 4];
      d.d_prev[cyc[(j + 1) % 4]] = cyc[j];
    }
    d.nodes[chi[i]].any_dart = on_to_b[i];
    d.nodes[chi[i]].degree = 4;
  }

  d.insert_before(fwd[0], p.corner_u);
  if (p.landing >= 0)
    d.insert_before(bwd[r], p.landing);
  else
    d.attach_first(bwd[r]);

  rec.from_node = un;
  rec.to_node = vnode;
  rec.drawn = true;
  rec.crossings = static_cast<std::int8_t>(r);
  rec.budget = static_cast<std::int8_t>(d.k - rec.fake - r);
  rec.chain.assign(fwd, fwd + r + 1);
  return a;
}

void undo_plan(Drawing& d, const AppliedPlan& a) {
  DrawingEdge& rec = d.edges[a.edge];
  int first = rec.chain.front();
  int last = d.d_twin[rec.chain.back()];
  d.detach(first);
  d.detach(last);
  if (a.placed_vertex >= 0) d.vertex_node[a.placed_vertex] = -1;
  rec.drawn = false;
  rec.chain.clear();
  rec.crossings = 0;
  rec.budget = static_cast<std::int8_t>(d.k - rec.fake);
  rec.from_node = rec.to_node = -1;
  for (int i = a.nsplit - 1; i >= 0; --i) {
    const AppliedPlan::Split& s = a.splits[i];
    DrawingEdge& ra = d.edges[s.edge_a];
    d.set_twins(s.d, s.t);
    ra.chain[s.slot] = s.old_forward;
    ra.chain.erase(ra.chain.begin() + s.slot + 1);
    ra.budget += 1;
    ra.crossings -= 1;
  }
  d.d_node.resize(a.darts0);
  d.d_next.resize(a.darts0);
  d.d_prev.resize(a.darts0);
  d.d_twin.resize(a.darts0);
  d.d_edge.resize(a.darts0);
  d.d_tag.resize(a.darts0);
  d.nodes.resize(a.nodes0);
}

std::vector<int> edge_insertion_order(const LabeledGraph& g, std::vector<char> placed) {
  placed.resize(g.n(), 0);
  std::vector<char> used(g.m(), 0);
  std::vector<int> order;
  auto lex_less = [&](int a, int b) {
    const EdgeInfo& x = g.edges[a];
    const EdgeInfo& y = g.edges[b];
    return std::pair(x.u, x.v) < std::pair(y.u, y.v);
  };
  auto adj = g.adjacency();
  bool any_placed = std::any_of(placed.begin(), placed.end(), [](char c) { return c; });
  if (!any_placed) {
    int seed = -1;
    for (int e = 0; e < g.m(); ++e)
      if (g.edges[e].uncrossable && (seed < 0 || lex_less(e, seed))) seed = e;
    if (seed < 0)
      for (int e = 0; e < g.m(); ++e)
        if (seed < 0 || lex_less(e, seed)) seed = e;
    if (seed < 0) return order;
    order.push_back(seed);
    used[seed] = 1;
    placed[g.edges[seed].u] = placed[g.edges[seed].v] = 1;
  }
  for (;;) {
    int best = -1;
    for (int e = 0; e < g.m(); ++e)
      if (!used[e] && placed[g.edges[e].u] && placed[g.edges[e].v] &&
          (best < 0 || lex_less(e, best)))
        best = e;
    if (best >= 0) {
      order.push_back(best);
      used[best] = 1;
      continue;
    }
    int bw = -1, bc = 0;
    for (int w = 0; w < g.n(); ++w) {
      if (placed[w]) continue;
      int c = 0;
      for (int nb : adj[w])
        if (placed[nb]) ++c;
      if (c > bc || (c == bc && c > 0 && w < bw)) {
        bw = w;
        bc = c;
      }
    }
    if (bw < 0) break;
    placed[bw] = 1;
  }
  for (int e = 0; e < g.m(); ++e)
    if (!used[e]) throw std::invalid_argument("edge_insertion_order: graph is disconnected");
  return order;
}

SearchOutcome run_search(SearchProblem& p) {
  SearchOutcome out;
  Drawing& d = *p.base;
  std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
    FaceSet faces = compute_faces(d);
    // Plans are generated against the faces of the static drawing, so a route
    // that revisits a face can describe a curve forced to cross itself.  Such
    // a route lifts the map off the sphere, and no later insertion can bring
    // it back, so prune as soon as Euler's formula fails.
    if (d.node_count() - d.dart_count() / 2 + faces.count() != 2) return true;
    if (i == p.order.size()) {
      out.completed += 1;
      if (p.on_complete && !p.on_complete(d)) {
        out.aborted = true;
        return false;
      }
      return true;
    }
    auto plans = insertion_plans(d, faces, p.order[i], p.tag_allowed);
    for (const auto& pl : plans) {
      if (p.max_expansions && out.expansions >= p.max_expansions) {
        out.exhausted_budget = true;
        return false;
      }
      out.expansions += 1;
      AppliedPlan a = apply_plan(d, pl);
      bool go_on = rec(i + 1);
      undo_plan(d, a);
      if (!go_on) return false;
    }
    return true;
  };
  rec(0);
  return out;
}

namespace {

struct Collector {
  Dedup dedup = Dedup::Labeled;
  bool keep = true;
  const LabeledGraph* graph = nullptr;
  std::vector<Drawing> drawings;
  std::vector<std::string> keys;
  std::map<std::string, int> seen;

  void take(Drawing& d) {
    if (dedup == Dedup::None) {
      keys.push_back(std::to_string(keys.size()));
      if (keep) drawings.push_back(d);
      return;
    }
    std::string key = dedup == Dedup::Labeled ? labeled_key(d) : canonical_key(d, *graph);
    auto [it, fresh] = seen.emplace(std::move(key), static_cast<int>(keys.size()));
    if (!fresh) return;
    keys.push_back(it->first);
    if (keep) drawings.push_back(d);
  }

  void merge(Collector& other) {
    for (std::size_t i = 0; i < other.keys.size(); ++i) {
      if (dedup == Dedup::None) {
        keys.push_back(std::to_string(keys.size()));
        if (keep) drawings.push_back(std::move(other.drawings[i]));
        continue;
      }
      auto [it, fresh] = seen.emplace(other.keys[i], static_cast<int>(keys.size()));
      if (!fresh) continue;
      keys.push_back(it->first);
      if (keep) drawings.push_back(std::move(other.drawings[i]));
    }
  }
};

}  // namespace

EnumResult enumerate_drawings(const LabeledGraph& g, const EnumOptions& opt) {
  if (g.m() == 0) throw std::invalid_argument("enumerate_drawings: graph has no edges");
  if (!g.connected()) throw std::invalid_argument("enumerate_drawings: graph is disconnected");
  auto order = edge_insertion_order(g);

  EnumResult res;
  Collector all;
  all.dedup = opt.dedup;
  all.keep = opt.keep_drawings;
  all.graph = &g;

  auto make_base = [&]() {
    Drawing d = init_drawing(g, order[0]);
    d.k = opt.k;
    for (auto& e : d.edges) {
      e.budget = static_cast<std::int8_t>(opt.k - e.fake);
      if (e.budget < 0) e.budget = 0;
    }
    return d;
  };

  std::vector<int> rest(order.begin() + 1, order.end());

  if (opt.threads <= 1 || order.size() < 2) {
    Drawing base = make_base();
    SearchProblem sp;
    sp.base = &base;
    sp.order = rest;
    sp.max_expansions = opt.max_expansions;
    sp.on_complete = [&](Drawing& d) {
      all.take(d);
      return true;
    };
    SearchOutcome so = run_search(sp);
    res.expansions = so.expansions;
    res.completed = so.completed;
    res.exhausted_budget = so.exhausted_budget;
  } else {
    Drawing base = make_base();
    FaceSet faces = compute_faces(base);
    auto level1 = insertion_plans(base, faces, rest[0]);
    std::vector<int> deeper(rest.begin() + 1, rest.end());
    int nt = std::min<int>(opt.threads, std::max<std::size_t>(level1.size(), 1));
    // One collector per first-level plan; merging them in plan order makes the
    // output independent of the thread count.
    std::vector<Collector> parts(level1.size());
    std::vector<SearchOutcome> outs(nt);
    std::uint64_t quota = opt.max_expansions ? (opt.max_expansions + nt - 1) / nt : 0;
    std::vector<std::thread> pool;
    for (int t = 0; t < nt; ++t) {
      pool.emplace_back([&, t]() {
        Drawing local = base;
        for (std::size_t i = t; i < level1.size(); i += nt) {
          parts[i].dedup = opt.dedup;
          parts[i].keep = opt.keep_drawings;
          parts[i].graph = &g;
          AppliedPlan ap = apply_plan(local, level1[i]);
          SearchProblem sp;
          sp.base = &local;
          sp.order = deeper;
          sp.max_expansions =
              quota ? (outs[t].expansions < quota ? quota - outs[t].expansions : 1) : 0;
          sp.on_complete = [&](Drawing& d) {
            parts[i].take(d);
            return true;
          };
          SearchOutcome so = run_search(sp);
          outs[t].expansions += so.expansions + 1;
          outs[t].completed += so.completed;
          outs[t].exhausted_budget |= so.exhausted_budget;
          undo_plan(local, ap);
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& part : parts) all.merge(part);
    for (int t = 0; t < nt; ++t) {
      res.expansions += outs[t].expansions;
      res.completed += outs[t].completed;
      res.exhausted_budget |= outs[t].exhausted_budget;
    }
  }
  res.drawings = std::move(all.drawings);
  res.keys = std::move(all.keys);
  return res;
}

KPlanarResult is_k_planar(const LabeledGraph& g, int k, std::uint64_t max_expansions,
                          int threads) {
  KPlanarResult res;
  res.outcome = TriState::Yes;
  auto comps = g.components();
  bool single = comps.size() == 1;
  for (const auto& comp : comps) {
    LabeledGraph sub = g.induced(comp);
    if (sub.m() == 0) continue;
    if (sub.n() >= 5 && k == 2 && sub.m() > 5 * sub.n() - 10) {
      res.outcome = TriState::No;
      res.has_witness = false;
      return res;
    }
    if (sub.m() == 1) {
      if (single) {
        res.witness = init_drawing(sub, 0);
        res.has_witness = true;
      }
      continue;
    }
    auto order = edge_insertion_order(sub);
    std::vector<int> rest(order.begin() + 1, order.end());
    Drawing base = init_drawing(sub, order[0]);
    base.k = k;
    for (auto& e : base.edges) {
      e.budget = static_cast<std::int8_t>(k - e.fake);
      if (e.budget < 0) e.budget = 0;
    }
    bool found = false;
    SearchProblem sp;
    sp.base = &base;
    sp.order = rest;
    sp.max_expansions = max_expansions;
    sp.on_complete = [&](Drawing& d) {
      found = true;
      if (single) {
        res.witness = d;
        res.has_witness = true;
      }
      return false;
    };
    SearchOutcome so = run_search(sp);
    res.expansions += so.expansions;
    if (found) continue;
    if (so.exhausted_budget) {
      res.outcome = TriState::Unknown;
      return res;
    }
    res.outcome = TriState::No;
    res.has_witness = false;
    return res;
  }
  (void)threads;
  return res;
}

}  // namespace kplane
