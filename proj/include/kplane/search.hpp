#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "kplane/drawing.hpp"

namespace kplane {

// One way of inserting an undrawn edge into the current drawing: start in the
// corner before `corner_u` (a dart at the placed source endpoint), cross the
// listed darts in order, then either land in the corner before `landing` (a
// dart at the placed target) or place the target vertex in the face reached.
struct InsertionPlan {
  int edge = -1;
  int source_vertex = -1;
  int corner_u = -1;
  std::array<int, 2> crossed{{-1, -1}};
  int ncross = 0;
  int landing = -1;
  std::array<int, 3> face_tags{{-1, -1, -1}};  // tag per traversed face
};

struct AppliedPlan {
  int edge = -1;
  int darts0 = 0, nodes0 = 0;
  int placed_vertex = -1;
  struct Split {
    int edge_a = -1;
    int slot = -1;
    int old_forward = -1;
    int d = -1, t = -1;  // the old twin pair
  };
  std::array<Split, 2> splits;
  int nsplit = 0;
};

// All legal plans for `edge` in the current drawing.  `tag_allowed`, when
// non-null, restricts faces in which a new vertex may be placed (indexed by
// dart tag; tags outside the vector are rejected).
std::vector<InsertionPlan> insertion_plans(const Drawing& d, const FaceSet& faces,
                                           int edge,
                                           const std::vector<char>* tag_allowed = nullptr);

AppliedPlan apply_plan(Drawing& d, const InsertionPlan& p);
void undo_plan(Drawing& d, const AppliedPlan& a);

// Insertion order: a seed edge (least uncrossable edge if any, else least
// edge), then repeatedly every edge with both endpoints placed, else the
// unplaced vertex with the most placed neighbors.  `placed` may pre-seed
// already drawn vertices, in which case only undrawn edges are ordered.
std::vector<int> edge_insertion_order(const LabeledGraph& g,
                                      std::vector<char> placed = {});

struct SearchOutcome {
  std::uint64_t expansions = 0;
  std::uint64_t completed = 0;
  bool exhausted_budget = false;
  bool aborted = false;
};

struct SearchProblem {
  Drawing* base = nullptr;
  std::vector<int> order;
  const std::vector<char>* tag_allowed = nullptr;
  std::uint64_t max_expansions = 0;  // 0 = unlimited
  // Called on every completed drawing; return false to abort the search.
  std::function<bool(Drawing&)> on_complete;
};

SearchOutcome run_search(SearchProblem& p);

enum class Dedup { None, Labeled, Canonical };

struct EnumOptions {
  int k = 2;
  Dedup dedup = Dedup::Labeled;
  std::uint64_t max_expansions = 0;
  int threads = 1;
  bool keep_drawings = true;
};

struct EnumResult {
  std::vector<Drawing> drawings;  // one per key in `keys` when kept
  std::vector<std::string> keys;
  std::uint64_t expansions = 0;
  std::uint64_t completed = 0;  // completions before dedup
  bool exhausted_budget = false;
};

EnumResult enumerate_drawings(const LabeledGraph& g, const EnumOptions& opt);

enum class TriState { Yes, No, Unknown };

struct KPlanarResult {
  TriState outcome = TriState::Unknown;
  std::uint64_t expansions = 0;
  bool has_witness = false;
  Drawing witness;  // a drawing of one component when outcome == Yes
};

// Short-circuiting decision procedure.  Disconnected graphs are decomposed
// into components.  Graphs with m > 5n - 10 (n >= 5) are rejected without
// search.  Unknown is reported only when the expansion budget runs out.
KPlanarResult is_k_planar(const LabeledGraph& g, int k,
                          std::uint64_t max_expansions = 0, int threads = 1);

}  // namespace kplane
