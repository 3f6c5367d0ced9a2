#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "kplane/canonical.hpp"
#include "kplane/drawing.hpp"
#include "kplane/search.hpp"

using namespace kplane;

namespace {

struct Snapshot {
  std::vector<std::int32_t> d_node, d_next, d_prev, d_twin, d_edge, d_tag;
  std::vector<std::int32_t> vertex_node;
  std::size_t nodes, edges;
  std::vector<std::vector<std::int32_t>> chains;
  std::vector<int> budgets;

  explicit Snapshot(const Drawing& d)
      : d_node(d.d_node), d_next(d.d_next), d_prev(d.d_prev), d_twin(d.d_twin),
        d_edge(d.d_edge), d_tag(d.d_tag), vertex_node(d.vertex_node),
        nodes(d.nodes.size()), edges(d.edges.size()) {
    for (const auto& e : d.edges) {
      chains.push_back(e.chain);
      budgets.push_back(e.budget);
    }
  }

  bool same(const Drawing& d) const {
    if (d_node != d.d_node || d_next != d.d_next || d_prev != d.d_prev ||
        d_twin != d.d_twin || d_edge != d.d_edge || d_tag != d.d_tag)
      return false;
    if (vertex_node != d.vertex_node) return false;
    if (nodes != d.nodes.size() || edges != d.edges.size()) return false;
    for (std::size_t e = 0; e < edges; ++e)
      if (chains[e] != d.edges[e].chain || budgets[e] != d.edges[e].budget)
        return false;
    return true;
  }
};

// Draws edges in insertion order, always picking the plan at `pick` modulo
// the number of available plans.  Returns the finished drawing.
Drawing draw_by_picks(const LabeledGraph& g, const std::vector<int>& picks) {
  auto order = edge_insertion_order(g);
  Drawing d = init_drawing(g, order[0]);
  for (std::size_t i = 1; i < order.size(); ++i) {
    FaceSet faces = compute_faces(d);
    auto plans = insertion_plans(d, faces, order[i]);
    REQUIRE(!plans.empty());
    int pick = i - 1 < picks.size() ? picks[i - 1] : 0;
    apply_plan(d, plans[pick % plans.size()]);
  }
  return d;
}

}  // namespace

TEST_CASE("a single drawn edge is a valid sphere map") {
  LabeledGraph g = gen_path(2);
  Drawing d = init_drawing(g, 0);
  CHECK(validate_drawing(d).empty());
  FaceSet f = compute_faces(d);
  CHECK(f.count() == 1);
  CHECK(f.size[0] == 2);
}

TEST_CASE("triangle drawn without crossings has two faces") {
  Drawing d = draw_by_picks(gen_cycle(3), {});
  auto errs = validate_drawing(d);
  for (const auto& e : errs) MESSAGE(e.what);
  CHECK(errs.empty());
  CHECK(compute_faces(d).count() == 2);
  for (const auto& e : d.edges) CHECK(e.crossings == 0);
}

TEST_CASE("planar K4 has four triangular faces") {
  // K4 admits a crossing-free insertion sequence; find one by trying all
  // plan picks at the last edge and checking crossings.
  LabeledGraph g = gen_complete(4);
  auto order = edge_insertion_order(g);
  Drawing d = init_drawing(g, order[0]);
  bool found = false;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (found) return;
    if (i == order.size()) {
      bool plane = true;
      for (const auto& e : d.edges)
        if (e.crossings != 0) plane = false;
      if (plane) {
        found = true;
        CHECK(validate_drawing(d).empty());
        FaceSet f = compute_faces(d);
        CHECK(f.count() == 4);
        for (int fi = 0; fi < f.count(); ++fi) CHECK(f.size[fi] == 3);
      }
      return;
    }
    FaceSet faces = compute_faces(d);
    for (const auto& plan : insertion_plans(d, faces, order[i])) {
      AppliedPlan a = apply_plan(d, plan);
      rec(i + 1);
      undo_plan(d, a);
      if (found) return;
    }
  };
  rec(1);
  CHECK(found);
}

TEST_CASE("applying and undoing a crossing plan restores the drawing exactly") {
  // Path 0-1, isolated pair 2-3 joined through 1-2; the last edge 0-3 can
  // cross 1-2.  Build the C4 and exercise a crossing plan.
  LabeledGraph g = gen_cycle(4);
  auto order = edge_insertion_order(g);
  Drawing d = init_drawing(g, order[0]);
  for (std::size_t i = 1; i + 1 < order.size(); ++i) {
    FaceSet faces = compute_faces(d);
    auto plans = insertion_plans(d, faces, order[i]);
    REQUIRE(!plans.empty());
    apply_plan(d, plans[0]);
  }
  Snapshot before(d);
  FaceSet faces = compute_faces(d);
  auto plans = insertion_plans(d, faces, order.back());
  bool exercised_crossing = false;
  for (const auto& plan : plans) {
    AppliedPlan a = apply_plan(d, plan);
    CHECK(validate_drawing(d).empty());
    if (plan.ncross > 0) {
      exercised_crossing = true;
      CHECK(d.edges[plan.edge].crossings == plan.ncross);
    }
    undo_plan(d, a);
    CHECK(before.same(d));
  }
  CHECK(exercised_crossing);
}

TEST_CASE("crossings keep both chirality variants distinct") {
  // The C4 admits crossed drawings; keys of mirror-image completions differ
  // in labeled mode.
  LabeledGraph g = gen_cycle(4);
  EnumOptions opt;
  opt.dedup = Dedup::Labeled;
  EnumResult res = enumerate_drawings(g, opt);
  std::set<std::string> keys(res.keys.begin(), res.keys.end());
  CHECK(keys.size() == res.keys.size());
  for (const auto& dr : res.drawings) CHECK(validate_drawing(dr).empty());
}
