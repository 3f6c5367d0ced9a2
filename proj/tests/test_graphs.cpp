#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <sstream>

#include "kplane/graph.hpp"

using namespace kplane;

TEST_CASE("generators produce expected sizes") {
  CHECK(gen_path(3).n() == 4);
  CHECK(gen_path(3).m() == 3);
  CHECK(gen_cycle(10).m() == 10);
  CHECK(gen_complete(9).m() == 36);

  LabeledGraph x = gen_gadget_x();
  CHECK(x.n() == 9);
  CHECK(x.m() == 32);
  std::multiset<int> degs;
  for (int v = 0; v < x.n(); ++v) degs.insert(x.degree(v));
  CHECK(degs == std::multiset<int>{6, 7, 7, 7, 7, 7, 7, 8, 8});

  LabeledGraph xp = gen_x_plus();
  CHECK(xp.n() == 10);
  CHECK(xp.m() == 35);
  CHECK(xp.degree(9) == 3);
  CHECK(xp.has_edge(9, 3));
  CHECK(xp.has_edge(9, 4));
  CHECK(xp.has_edge(9, 6));
}

TEST_CASE("gadget automorphism group has order 32") {
  CHECK(automorphisms(gen_gadget_x()).size() == 32);
}

TEST_CASE("family sizes match the closed form") {
  for (int k = 2; k <= 10; ++k) {
    LabeledGraph g = gen_gk(k);
    CHECK(g.n() == 10 * k + 140);
    CHECK(g.m() == 20 * k + 630);
    CHECK(g.connected());
  }
  CHECK_THROWS(gen_gk(1));
}

TEST_CASE("ring scaffolds carry the braided matching") {
  LabeledGraph g = gen_gk_minus(3, false);
  CHECK(g.n() == 30);
  CHECK(g.m() == 50);
  // Matching pattern between consecutive rings.
  for (int ring = 1; ring <= 2; ++ring)
    for (int j = 0; j < 10; ++j) {
      int u = (ring - 1) * 10 + j;
      int w = ring * 10 + braid_partner(j);
      CHECK(g.has_edge(u, w));
    }
  // Only the first ring is uncrossable unless asked otherwise.
  int uncrossable = 0;
  for (const auto& e : g.edges)
    if (e.uncrossable) ++uncrossable;
  CHECK(uncrossable == 10);
  LabeledGraph h = gen_gk_minus(3, true);
  int both = 0;
  for (const auto& e : h.edges)
    if (e.uncrossable) ++both;
  CHECK(both == 20);
}

TEST_CASE("braid partners are a perfect matching of indices") {
  std::set<int> hit;
  for (int j = 0; j < 10; ++j) {
    int p = braid_partner(j);
    CHECK(p >= 0);
    CHECK(p < 10);
    hit.insert(p);
  }
  CHECK(hit.size() == 10);
  CHECK(braid_partner(0) == 8);
  CHECK(braid_partner(1) == 3);
}

TEST_CASE("edge list text round-trips") {
  LabeledGraph g = gen_gk_minus(2, true);
  std::string text = write_edge_list(g);
  LabeledGraph h = read_edge_list(text);
  REQUIRE(h.n() == g.n());
  REQUIRE(h.m() == g.m());
  for (int e = 0; e < g.m(); ++e) {
    CHECK(h.edges[e].u == g.edges[e].u);
    CHECK(h.edges[e].v == g.edges[e].v);
    CHECK(h.edges[e].uncrossable == g.edges[e].uncrossable);
  }
  CHECK_THROWS(read_edge_list("n x\n"));
  CHECK_THROWS(read_edge_list("n 3\n0 0\n"));
}

TEST_CASE("K9 minus removals stay distinct graphs") {
  LabeledGraph a = gen_k9_minus({{0, 1}});
  CHECK(a.m() == 35);
  LabeledGraph b = gen_k9_minus({{0, 1}, {2, 3}, {4, 5}});
  CHECK(b.m() == 33);
  CHECK(!b.has_edge(4, 5));
}

TEST_CASE("isomorphism keys separate small classes") {
  LabeledGraph p4 = gen_path(3);
  LabeledGraph star = read_edge_list("n 4\n0 1\n0 2\n0 3\n");
  LabeledGraph tri = gen_cycle(3);
  CHECK(iso_canonical_key(p4) != iso_canonical_key(star));
  CHECK(iso_canonical_key(p4) != iso_canonical_key(tri));
  // Relabeling does not change the key.
  LabeledGraph p4b = read_edge_list("n 4\n2 3\n1 3\n0 1\n");
  CHECK(iso_canonical_key(p4) == iso_canonical_key(p4b));
}

TEST_CASE("connected graph catalogue has the right shape") {
  auto cat = connected_graphs_up_to_edges(4);
  // 1, 1, 3, 5 connected iso classes with 1..4 edges.
  int by_m[5] = {0, 0, 0, 0, 0};
  for (const auto& g : cat) {
    REQUIRE(g.m() >= 1);
    REQUIRE(g.m() <= 4);
    REQUIRE(g.connected());
    by_m[g.m()] += 1;
  }
  CHECK(by_m[1] == 1);
  CHECK(by_m[2] == 1);
  CHECK(by_m[3] == 3);
  CHECK(by_m[4] == 5);
  std::set<std::string> keys;
  for (const auto& g : cat) keys.insert(iso_canonical_key(g));
  CHECK(keys.size() == cat.size());
}
