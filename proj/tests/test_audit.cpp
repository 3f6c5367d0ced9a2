#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "kplane/audit.hpp"
#include "kplane/canonical.hpp"
#include "kplane/drawing.hpp"
#include "kplane/graph.hpp"
#include "kplane/saturate.hpp"
#include "kplane/search.hpp"

using namespace kplane;

namespace {

// Exhaustive assignment oracle: is there any collision-free completion of
// the ledger where every T3-2 vertex claims one of its options and every
// mingler claims an own-plus-pair triple at some neighbor?  Independent of
// the resolution procedure; tries every combination.
bool assignment_exists(const Drawing& d, const ClaimLedger& led) {
  std::vector<int> owner(led.halfedge_count, -1);
  for (int h = 0; h < led.halfedge_count; ++h)
    owner[h] = led.claims[h].claimant;

  int n = 0;
  for (const auto& e : d.edges)
    if (!e.artifact) n = std::max({n, e.gu + 1, e.gv + 1});
  std::vector<std::vector<int>> adj(n);
  std::map<std::pair<int, int>, int> eid;
  for (int e = 0; e < static_cast<int>(d.edges.size()); ++e) {
    const auto& r = d.edges[e];
    if (r.artifact || r.gu < 0) continue;
    adj[r.gu].push_back(r.gv);
    adj[r.gv].push_back(r.gu);
    eid[{std::min(r.gu, r.gv), std::max(r.gu, r.gv)}] = e;
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  auto edge_of = [&](int a, int b) {
    auto it = eid.find({std::min(a, b), std::max(a, b)});
    return it == eid.end() ? -1 : it->second;
  };

  std::function<bool(std::size_t, std::size_t)> rec =
      [&](std::size_t i32, std::size_t i33) -> bool {
    if (i32 < led.t32.size()) {
      const auto& t = led.t32[i32];
      for (int o : t.options) {
        if (owner[o] != -1) continue;
        owner[o] = t.vertex;
        if (rec(i32 + 1, i33)) return true;
        owner[o] = -1;
      }
      return false;
    }
    if (i33 < led.t33.size()) {
      const auto& t = led.t33[i33];
      for (int a : adj[t.vertex]) {
        int own_e = edge_of(t.vertex, a);
        int own = own_e < 0 ? -1 : halfedge_at(d, own_e, a);
        if (own < 0 || owner[own] != -1) continue;
        std::vector<int> pair;
        bool ok = true;
        for (int w : adj[t.vertex]) {
          if (w == a) continue;
          int e = edge_of(w, a);
          int h = e < 0 ? -1 : halfedge_at(d, e, a);
          if (h < 0 || owner[h] != -1 ||
              !std::binary_search(t.assessed.begin(), t.assessed.end(), h)) {
            ok = false;
            break;
          }
          pair.push_back(h);
        }
        if (!ok || pair.size() != 2) continue;
        owner[own] = t.vertex;
        for (int h : pair) owner[h] = t.vertex;
        if (rec(i32, i33 + 1)) return true;
        owner[own] = -1;
        for (int h : pair) owner[h] = -1;
      }
      return false;
    }
    return true;
  };
  return rec(0, 0);
}

// Two interleaved rings of minglers around hubs v and w; every mingler
// assesses all six halfedges among its neighbors and every one of them is
// contested, so the cycle schedules have to run.
LabeledGraph ring_fixture(int k) {
  LabeledGraph g;
  int v = g.add_vertex("v"), w = g.add_vertex("w");
  std::vector<int> x(k);
  for (int i = 0; i < k; ++i) x[i] = g.add_vertex("x" + std::to_string(i));
  for (int i = 0; i < k; ++i) {
    g.add_edge(v, x[i]);
    g.add_edge(w, x[i]);
    g.add_edge(x[i], x[(i + 1) % k]);
  }
  for (int i = 0; i < k; ++i) {
    int u = g.add_vertex("u" + std::to_string(i));
    g.add_edge(u, v);
    g.add_edge(u, x[i]);
    g.add_edge(u, x[(i + 1) % k]);
  }
  for (int i = 0; i < k; ++i) {
    int m = g.add_vertex("m" + std::to_string(i));
    g.add_edge(m, w);
    g.add_edge(m, x[i]);
    g.add_edge(m, x[(i + 1) % k]);
  }
  return g;
}

LabeledGraph diamond_graph() {
  LabeledGraph g;
  for (int i = 0; i < 4; ++i) g.add_vertex("v" + std::to_string(i));
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.add_edge(1, 2);
  g.add_edge(0, 3);
  g.add_edge(1, 3);
  return g;
}

LabeledGraph k5_with_hermit() {
  LabeledGraph g = gen_complete(5);
  int h = g.add_vertex("h");
  g.add_edge(h, 0);
  g.add_edge(h, 1);
  return g;
}

const PredicateResult& check_named(const StructuralReport& rep,
                                   const std::string& name) {
  for (const auto& c : rep.checks)
    if (c.name == name) return c;
  static PredicateResult missing;
  REQUIRE(false);
  return missing;
}

std::map<int, std::map<int, int>> claims_by_vertex(const Drawing& d,
                                                   const ClaimLedger& led) {
  std::map<int, std::map<int, int>> at;
  for (int h = 0; h < led.halfedge_count; ++h)
    if (led.claims[h].claimant >= 0)
      at[led.claims[h].claimant][halfedge_vertex(d, h)] += 1;
  return at;
}

}  // namespace

TEST_CASE("halfedge encoding round trips") {
  Drawing d = empty_drawing(gen_path(3));  // edges 0-1, 1-2
  CHECK(halfedge_at(d, 0, 0) == 0);
  CHECK(halfedge_at(d, 0, 1) == 1);
  CHECK(halfedge_at(d, 1, 1) == 2);
  CHECK(halfedge_at(d, 1, 2) == 3);
  CHECK(halfedge_at(d, 0, 2) == -1);
  CHECK(halfedge_vertex(d, 1) == 1);
  CHECK(halfedge_other(d, 1) == 0);
  CHECK(halfedge_vertex(d, 2) == 1);
  CHECK(halfedge_other(d, 3) == 1);
  CHECK(halfedge_name(d, 1) == "0-1@1");
}

TEST_CASE("classification covers the degree patterns") {
  SUBCASE("hermits and paired degree-three vertices in the diamond") {
    Drawing d = empty_drawing(diamond_graph());
    auto cls = classify_vertices(d);
    CHECK(cls[0].kind == VertexKind::T3_3Hermit);
    CHECK(cls[0].partner == 1);
    CHECK(cls[1].kind == VertexKind::T3_3Hermit);
    CHECK(cls[1].partner == 0);
    CHECK(cls[2].kind == VertexKind::Hermit);
    CHECK(cls[2].host_edge == 0);  // edge 0-1
    CHECK(cls[3].kind == VertexKind::Hermit);
    CHECK(cls[3].host_edge == 0);
  }
  SUBCASE("degree-four vertex with a hermit neighbor") {
    LabeledGraph g;
    for (const char* l : {"u", "h", "v", "x", "y"}) g.add_vertex(l);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    g.add_edge(0, 3);
    g.add_edge(0, 4);
    Drawing d = empty_drawing(g);
    VertexClass c = classify_vertex(d, 0);
    CHECK(c.kind == VertexKind::T4H);
    CHECK(c.partner == 1);
    CHECK(c.anchor == 2);
  }
  SUBCASE("degenerate and high kinds") {
    LabeledGraph g;
    for (int i = 0; i < 7; ++i) g.add_vertex("v");
    for (int i = 1; i < 6; ++i) g.add_edge(0, i);  // vertex 6 isolated
    Drawing d = empty_drawing(g);
    CHECK(classify_vertex(d, 0).kind == VertexKind::High);
    CHECK(classify_vertex(d, 1).kind == VertexKind::Degenerate);
    CHECK(classify_vertex(d, 6).kind == VertexKind::Degenerate);
  }
}

TEST_CASE("crossing patterns classify against the crossing partner") {
  LabeledGraph k4 = gen_complete(4);
  EnumOptions opt;
  EnumResult res = enumerate_drawings(k4, opt);
  CHECK(res.drawings.size() == 8);

  int one_cross = 0, two_cross = 0;
  for (const Drawing& d : res.drawings) {
    auto xl = crossing_list(d);
    if (xl.size() == 2) ++two_cross;
    if (xl.size() != 1) continue;
    ++one_cross;
    int ea = xl[0][0], eb = xl[0][1];
    for (const VertexClass& c : classify_vertices(d)) {
      CHECK(c.kind == VertexKind::T3_2);
      CHECK(c.uncrossed.size() == 2);
      // the crossed edge at this vertex is its end of the crossing pair
      int mine = (d.edges[ea].gu == c.vertex || d.edges[ea].gv == c.vertex)
                     ? ea
                     : eb;
      int partner = mine == ea ? eb : ea;
      CHECK(c.crossed[0] == mine);
      CHECK(c.crossing_edge == partner);
      CHECK(c.anchor == std::min(d.edges[partner].gu, d.edges[partner].gv));
      CHECK(c.far_end == std::max(d.edges[partner].gu, d.edges[partner].gv));
    }
  }
  CHECK(one_cross == 6);
  CHECK(two_cross == 0);
}

TEST_CASE("a tree drawing with two crossings yields a T3-1 vertex") {
  LabeledGraph g;
  for (int i = 0; i < 5; ++i) g.add_vertex("v" + std::to_string(i));
  g.add_edge(0, 1);  // edge 0
  g.add_edge(0, 3);
  g.add_edge(0, 4);
  g.add_edge(1, 2);
  EnumOptions opt;
  EnumResult res = enumerate_drawings(g, opt);
  bool seen = false;
  for (const Drawing& d : res.drawings) {
    VertexClass c = classify_vertex(d, 0);
    if (c.kind != VertexKind::T3_1) continue;
    seen = true;
    CHECK(c.anchor == 1);
    CHECK(c.uncrossed.size() == 1);
    CHECK(c.uncrossed[0] == 0);
  }
  CHECK(seen);
}

TEST_CASE("structural report flags the cycle's defects") {
  AdmissibleSet s = admissible_drawings(gen_cycle(10));
  REQUIRE(s.drawings.size() == 1);
  StructuralReport rep = structural_report(s.drawings[0]);
  CHECK_FALSE(rep.all_pass);
  std::set<std::string> failing;
  for (const auto& c : rep.checks)
    if (!c.pass) failing.insert(c.name);
  CHECK(failing == std::set<std::string>{"common-face-adjacency",
                                         "hermit-triangle",
                                         "hermit-neighbor-degrees",
                                         "hermit-quota"});
  CHECK(check_named(rep, "common-face-adjacency").subjects == 90);
  CHECK(check_named(rep, "hermit-triangle").subjects == 10);
  CHECK(check_named(rep, "two-connected").pass);
  CHECK(check_named(rep, "uncrossed-edge-everywhere").pass);
}

TEST_CASE("structural report flags the diamond's defects") {
  AdmissibleSet s = admissible_drawings(diamond_graph());
  REQUIRE(s.drawings.size() == 2);
  CHECK(s.crossings == 0);
  StructuralReport rep = structural_report(s.drawings[0]);
  std::set<std::string> failing;
  for (const auto& c : rep.checks)
    if (!c.pass) failing.insert(c.name);
  CHECK(failing == std::set<std::string>{"common-face-adjacency",
                                         "hermit-per-edge",
                                         "hermit-neighbor-degrees",
                                         "hermit-quota", "paired-t3-3"});
  const auto& host = check_named(rep, "hermit-per-edge");
  REQUIRE(host.witnesses.size() == 1);
  CHECK(host.witnesses[0] == "edge 0-1 hosts 2 hermits");
}

TEST_CASE("structural report passes on admissible complete graph drawings") {
  for (int n : {5, 6}) {
    AdmissibleSet s = admissible_drawings(gen_complete(n));
    for (const Drawing& d : s.drawings) {
      StructuralReport rep = structural_report(d);
      CHECK(rep.all_pass);
    }
  }
}

TEST_CASE("hermits claim their pair at every high-degree neighbor") {
  AdmissibleSet s = admissible_drawings(k5_with_hermit());
  REQUIRE(s.drawings.size() == 48);
  CHECK(s.crossings == 1);
  CHECK(s.doubly_crossed == 0);

  // frozen for the first drawing: the hermit (vertex 5) claims its own
  // halfedge and the host halfedge at both neighbors
  {
    const Drawing& d = s.drawings[0];
    ClaimLedger led = resolve_claims(d, assessments(d));
    CHECK(led.violations.empty());
    std::set<std::string> names;
    for (int h = 0; h < led.halfedge_count; ++h)
      if (led.claims[h].claimant >= 0) {
        CHECK(led.claims[h].claimant == 5);
        CHECK(led.claims[h].rule == ClaimRule::C1);
        names.insert(halfedge_name(d, h));
      }
    CHECK(names ==
          std::set<std::string>{"0-1@0", "0-1@1", "0-5@0", "1-5@1"});
  }

  for (const Drawing& d : s.drawings) {
    ClaimLedger led = resolve_claims(d, assessments(d));
    CHECK(led.violations.empty());
    LedgerCheck lc = check_ledger(d, led);
    CHECK(lc.all());
  }
}

TEST_CASE("mingler rings resolve and meet quotas") {
  for (int k : {3, 4, 5}) {
    CAPTURE(k);
    LabeledGraph g = ring_fixture(k);
    Drawing d = empty_drawing(g);
    ClaimLedger led = assessments(d);
    CHECK(led.t32.empty());
    REQUIRE(static_cast<int>(led.t33.size()) == 2 * k);
    for (const auto& t : led.t33) CHECK(t.assessed.size() == 6);
    CHECK(assignment_exists(d, led));

    ClaimLedger out = resolve_claims(d, led);
    CHECK(out.violations.empty());
    auto at = claims_by_vertex(d, out);
    for (const auto& t : out.t33) {
      REQUIRE(t.anchor >= 0);
      CHECK(at[t.vertex].size() == 1);
      CHECK(at[t.vertex].begin()->second == 3);
      CHECK(at[t.vertex].begin()->first == t.anchor);
    }
  }
}

TEST_CASE("forced chains follow contested options") {
  SUBCASE("a pre-claimed option forces the chain through both vertices") {
    LabeledGraph g;
    for (const char* l : {"w", "a", "b", "c", "e", "u1", "u2"})
      g.add_vertex(l);
    g.add_edge(0, 1);  // w-a, edge 0
    g.add_edge(0, 2);  // w-b, edge 1
    g.add_edge(0, 3);  // w-c, edge 2
    g.add_edge(0, 4);  // w-e, edge 3
    Drawing d = empty_drawing(g);
    ClaimLedger led;
    led.halfedge_count = 2 * static_cast<int>(d.edges.size());
    led.claims.assign(led.halfedge_count, Claim{});
    int wa = halfedge_at(d, 0, 0), wb = halfedge_at(d, 1, 0),
        wc = halfedge_at(d, 2, 0);
    led.claim(wa, 99, ClaimRule::C1);
    T32Assessment t1;
    t1.vertex = 5;
    t1.anchor = 0;
    t1.options = {wa, wb};
    T32Assessment t2;
    t2.vertex = 6;
    t2.anchor = 0;
    t2.options = {wb, wc};
    led.t32 = {t1, t2};
    CHECK(assignment_exists(d, led));
    ClaimLedger out = resolve_claims(d, led);
    CHECK(out.violations.empty());
    CHECK(out.t32[0].chosen == wb);
    CHECK(out.t32[1].chosen == wc);
    CHECK(out.claims[wb].claimant == 5);
    CHECK(out.claims[wc].claimant == 6);
  }
  SUBCASE("the chain hands over to a mingler at the far endpoint") {
    // u1's only open option is the b-halfedge of edge w-b; the mingler m
    // also assesses it and must follow up with its pair at b.
    LabeledGraph g;
    int w = g.add_vertex("w"), a = g.add_vertex("a"), b = g.add_vertex("b");
    int c = g.add_vertex("c"), m = g.add_vertex("m");
    int e_wa = g.add_edge(w, a);
    int e_wb = g.add_edge(w, b);
    int e_cb = g.add_edge(c, b);
    int e_mb = g.add_edge(m, b);
    g.add_edge(m, w);
    g.add_edge(m, c);
    // padding so the claim vertices have high degree
    for (int i = 0; i < 2; ++i) {
      int p = g.add_vertex("p");
      g.add_edge(b, p);
      g.add_edge(w, p);
    }
    Drawing d = empty_drawing(g);
    ClaimLedger led;
    led.halfedge_count = 2 * static_cast<int>(d.edges.size());
    led.claims.assign(led.halfedge_count, Claim{});
    int h_wa = halfedge_at(d, e_wa, w);
    int h_wb_w = halfedge_at(d, e_wb, w);
    int h_wb_b = halfedge_at(d, e_wb, b);
    int h_cb_b = halfedge_at(d, e_cb, b);
    led.claim(h_wa, 99, ClaimRule::C1);
    T32Assessment t1;
    t1.vertex = a;
    t1.anchor = w;
    t1.options = {h_wa, h_wb_w};
    led.t32 = {t1};
    T33Assessment t2;
    t2.vertex = m;
    t2.assessed = {h_wb_w, h_wb_b, h_cb_b};
    std::sort(t2.assessed.begin(), t2.assessed.end());
    led.t33 = {t2};
    ClaimLedger out = resolve_claims(d, led);
    CHECK(out.violations.empty());
    CHECK(out.t32[0].chosen == h_wb_w);
    CHECK(out.t33[0].anchor == b);
    CHECK(out.claims[h_wb_b].claimant == m);
    CHECK(out.claims[h_cb_b].claimant == m);
    CHECK(out.claims[halfedge_at(d, e_mb, b)].claimant == m);
  }
}

TEST_CASE("starved options and unmet quotas are reported") {
  SUBCASE("two vertices contending for one halfedge") {
    LabeledGraph g;
    for (const char* l : {"w", "a", "u1", "u2"}) g.add_vertex(l);
    g.add_edge(0, 1);
    Drawing d = empty_drawing(g);
    ClaimLedger led;
    led.halfedge_count = 2;
    led.claims.assign(2, Claim{});
    int wa = halfedge_at(d, 0, 0);
    T32Assessment t1;
    t1.vertex = 2;
    t1.options = {wa};
    T32Assessment t2;
    t2.vertex = 3;
    t2.options = {wa};
    led.t32 = {t1, t2};
    CHECK_FALSE(assignment_exists(d, led));
    ClaimLedger out = resolve_claims(d, led);
    CHECK_FALSE(out.violations.empty());
    LedgerCheck lc = check_ledger(d, out);
    CHECK_FALSE(lc.no_violations);
  }
  SUBCASE("hermits without high-degree neighbors fail their quota") {
    AdmissibleSet s = admissible_drawings(diamond_graph());
    const Drawing& d = s.drawings[0];
    ClaimLedger led = resolve_claims(d, assessments(d));
    CHECK_FALSE(led.violations.empty());
    LedgerCheck lc = check_ledger(d, led);
    CHECK_FALSE(lc.quotas_met);
    CHECK_FALSE(lc.no_violations);
    CHECK(lc.assessors_ok);
    CHECK(lc.degree5_rule);
    CHECK_FALSE(lc.all());
  }
}

TEST_CASE("degree profiles and inequalities") {
  SUBCASE("complete graphs") {
    AdmissibleSet s5 = admissible_drawings(gen_complete(5));
    InequalityReport r5 = degree_inequalities(s5.drawings[0]);
    CHECK(r5.profile.n == 5);
    CHECK(r5.profile.m == 10);
    CHECK(r5.profile.by_degree == std::vector<int>{0, 0, 0, 0, 5});
    CHECK(r5.all_hold);
    AdmissibleSet s6 = admissible_drawings(gen_complete(6));
    InequalityReport r6 = degree_inequalities(s6.drawings[0]);
    CHECK(r6.profile.by_degree == std::vector<int>{0, 0, 0, 0, 0, 6});
    CHECK(r6.all_hold);
  }
  SUBCASE("hermit capacity is tight on the hermit fixture") {
    AdmissibleSet s = admissible_drawings(k5_with_hermit());
    InequalityReport r = degree_inequalities(s.drawings[0]);
    CHECK(r.profile.n == 6);
    CHECK(r.profile.m == 12);
    CHECK(r.profile.by_degree == std::vector<int>{0, 0, 1, 0, 3, 2});
    REQUIRE(r.profile.refined.size() == 6);
    CHECK(r.profile.refined[5] == std::vector<int>{0, 2});
    CHECK(r.handshake_ok);
    CHECK(r.refinement_ok);
    CHECK(r.identity_ok);
    REQUIRE(r.checks.size() == 3);
    CHECK(r.checks[0].name == "hermit-capacity");
    CHECK(r.checks[0].lhs == 2.0);
    CHECK(r.checks[0].rhs == 2.0);
    CHECK(r.checks[1].lhs == 0.0);
    CHECK(r.checks[2].name == "combined-capacity");
    CHECK(r.checks[2].lhs == 1.0);
    CHECK(r.checks[2].rhs == 1.0);
    CHECK(r.all_hold);
    CHECK(r.note.empty());
  }
  SUBCASE("the cycle violates hermit capacity") {
    AdmissibleSet s = admissible_drawings(gen_cycle(10));
    InequalityReport r = degree_inequalities(s.drawings[0]);
    CHECK(r.handshake_ok);
    CHECK(r.identity_ok);
    CHECK(r.checks[0].lhs == 20.0);
    CHECK(r.checks[0].rhs == 0.0);
    CHECK_FALSE(r.checks[0].holds);
    CHECK_FALSE(r.all_hold);
    CHECK_FALSE(r.note.empty());
  }
  SUBCASE("counting identities hold on every drawing") {
    LabeledGraph k4 = gen_complete(4);
    EnumOptions opt;
    EnumResult res = enumerate_drawings(k4, opt);
    for (const Drawing& d : res.drawings) {
      InequalityReport r = degree_inequalities(d);
      CHECK(r.handshake_ok);
      CHECK(r.refinement_ok);
      CHECK(r.identity_ok);
    }
  }
}

TEST_CASE("admissible drawings match exhaustive filtering") {
  auto graphs = connected_graphs_up_to_edges(6);
  REQUIRE(graphs.size() == 52);
  int compared = 0;
  for (const LabeledGraph& g : graphs) {
    if (g.m() == 0) continue;
    EnumOptions opt;
    EnumResult res = enumerate_drawings(g, opt);
    int best_cr = 1 << 20, best_dc = 1 << 20;
    std::vector<std::pair<std::pair<int, int>, std::string>> all;
    for (std::size_t i = 0; i < res.drawings.size(); ++i) {
      const Drawing& d = res.drawings[i];
      int cr = static_cast<int>(crossing_list(d).size());
      int dc = 0;
      for (const auto& e : d.edges) dc += e.crossings == 2;
      all.push_back({{cr, dc}, res.keys[i]});
      if (cr < best_cr || (cr == best_cr && dc < best_dc)) {
        best_cr = cr;
        best_dc = dc;
      }
    }
    std::vector<std::string> expect;
    for (auto& [cd, key] : all)
      if (cd.first == best_cr && cd.second == best_dc) expect.push_back(key);
    std::sort(expect.begin(), expect.end());

    AdmissibleSet s = admissible_drawings(g);
    CHECK(s.keys == expect);
    CHECK(s.crossings == best_cr);
    CHECK(s.doubly_crossed == best_dc);
    ++compared;
  }
  CHECK(compared == 51);  // one connected graph has no edges
}

TEST_CASE("admissible sets of the standard fixtures") {
  struct Row {
    LabeledGraph g;
    std::size_t count;
    int cr, dc;
  };
  std::vector<Row> rows;
  rows.push_back({gen_complete(4), 2, 0, 0});
  rows.push_back({gen_complete(5), 30, 1, 0});
  rows.push_back({gen_complete(6), 120, 3, 0});
  rows.push_back({gen_cycle(10), 1, 0, 0});
  rows.push_back({k5_with_hermit(), 48, 1, 0});
  for (const Row& row : rows) {
    CAPTURE(row.g.n());
    CAPTURE(row.g.m());
    AdmissibleSet s = admissible_drawings(row.g);
    CHECK(s.drawings.size() == row.count);
    CHECK(s.keys.size() == row.count);
    CHECK(s.crossings == row.cr);
    CHECK(s.doubly_crossed == row.dc);
    CHECK(s.expansions > 0);
    CHECK_FALSE(s.inconclusive);
    CHECK(std::is_sorted(s.keys.begin(), s.keys.end()));
    CHECK(std::adjacent_find(s.keys.begin(), s.keys.end()) == s.keys.end());
    for (const Drawing& d : s.drawings) {
      CHECK(drawing_ok(d));
      CHECK(static_cast<int>(crossing_list(d).size()) == s.crossings);
      int dc = 0;
      for (const auto& e : d.edges) dc += e.crossings == 2;
      CHECK(dc == s.doubly_crossed);
    }
  }

  // edgeless and disconnected inputs yield an empty set
  LabeledGraph lone;
  lone.add_vertex("a");
  CHECK(admissible_drawings(lone).drawings.empty());
  LabeledGraph two;
  two.add_vertex("a");
  two.add_vertex("b");
  two.add_vertex("c");
  two.add_edge(0, 1);
  CHECK(admissible_drawings(two).drawings.empty());
}

TEST_CASE("branch and bound respects its budget") {
  AdmissibleSet s = admissible_drawings(gen_complete(6), 50);
  CHECK(s.inconclusive);
  CHECK(s.expansions <= 50);
}

TEST_CASE("reroute membership over a drawing set") {
  LabeledGraph k4 = gen_complete(4);
  EnumOptions opt;
  EnumResult res = enumerate_drawings(k4, opt);
  AdmissibleSet full, single;
  for (std::size_t i = 0; i < res.drawings.size(); ++i) {
    auto xl = crossing_list(res.drawings[i]);
    if (xl.size() != 1) continue;
    full.drawings.push_back(res.drawings[i]);
    const auto& rec = res.drawings[i].edges[xl[0][0]];
    if (rec.gu == 0 && rec.gv == 2)
      single.drawings.push_back(res.drawings[i]);
  }
  REQUIRE(full.drawings.size() == 6);
  REQUIRE(single.drawings.size() == 2);

  RerouteCheck all6 = t32_reroute_check(full);
  CHECK(all6.checked == 24);
  CHECK(all6.ok);
  CHECK(all6.witnesses.empty());

  RerouteCheck lone = t32_reroute_check(single);
  CHECK(lone.checked == 8);
  CHECK_FALSE(lone.ok);
  CHECK(lone.witnesses.size() == 8);
}

TEST_CASE("density verdicts") {
  DensityVerdict k5 = density_verdict(gen_complete(5));
  CHECK(k5.outcome == Verdict::Pass);
  CHECK(k5.maximal == TriState::Yes);
  CHECK(k5.margin == 0);

  DensityVerdict k6 = density_verdict(gen_complete(6));
  CHECK(k6.outcome == Verdict::Pass);
  CHECK(k6.margin == 3);

  DensityVerdict c5 = density_verdict(gen_cycle(5));
  CHECK(c5.outcome == Verdict::Inconclusive);
  CHECK(c5.maximal == TriState::No);
  CHECK_FALSE(c5.note.empty());

  DensityVerdict small = density_verdict(gen_complete(4));
  CHECK(small.outcome == Verdict::Inconclusive);
}

TEST_CASE("whole graph audits") {
  SUBCASE("complete graph on five vertices is clean") {
    GraphAudit ga = audit_graph(gen_complete(5));
    CHECK(ga.clean);
    CHECK(ga.admissible.drawings.size() == 30);
    CHECK(ga.drawings.size() == 30);
    for (const DrawingAudit& da : ga.drawings) {
      CHECK(da.structure.all_pass);
      CHECK(da.ledger_check.all());
      CHECK(da.inequalities.all_hold);
    }
    CHECK(ga.reroute.ok);
    CHECK(ga.density.outcome == Verdict::Pass);
  }
  SUBCASE("first-drawing-only and threaded options") {
    AuditOptions opt;
    opt.all_admissible = false;
    opt.with_density = false;
    GraphAudit one = audit_graph(gen_complete(5), opt);
    CHECK(one.drawings.size() == 1);

    AuditOptions par;
    par.threads = 2;
    par.with_density = false;
    GraphAudit ga = audit_graph(gen_complete(6), par);
    CHECK(ga.drawings.size() == 120);
    for (const DrawingAudit& da : ga.drawings) {
      CHECK(da.structure.all_pass);
      CHECK(da.ledger_check.all());
      CHECK(da.inequalities.all_hold);
    }
  }
  SUBCASE("non-maximal input is not clean") {
    GraphAudit ga = audit_graph(gen_cycle(5));
    CHECK_FALSE(ga.clean);
    CHECK(ga.density.outcome == Verdict::Inconclusive);
    CHECK(ga.density.maximal == TriState::No);
  }
}

TEST_CASE("sweeps certify only the complete graphs as maximal") {
  {
    auto all5 = all_graphs_on(5);
    CHECK(all5.size() == 34);
    std::vector<const LabeledGraph*> maximal;
    for (const auto& g : all5) {
      if (!g.connected()) continue;
      if (graph_maximal(g, 2) == TriState::Yes) maximal.push_back(&g);
    }
    REQUIRE(maximal.size() == 1);
    CHECK(maximal[0]->m() == 10);
    CHECK(maximal[0]->m() - 2 * maximal[0]->n() == 0);
    CHECK(iso_canonical_key(*maximal[0]) ==
          iso_canonical_key(gen_complete(5)));
  }
  {
    auto all6 = all_graphs_on(6);
    CHECK(all6.size() == 156);
    std::vector<const LabeledGraph*> maximal;
    int connected = 0;
    for (const auto& g : all6) {
      if (!g.connected()) continue;
      ++connected;
      if (graph_maximal(g, 2) == TriState::Yes) maximal.push_back(&g);
    }
    CHECK(connected == 112);
    REQUIRE(maximal.size() == 1);
    CHECK(maximal[0]->m() == 15);
    CHECK(maximal[0]->m() - 2 * maximal[0]->n() == 3);
    CHECK(iso_canonical_key(*maximal[0]) ==
          iso_canonical_key(gen_complete(6)));
  }
}
