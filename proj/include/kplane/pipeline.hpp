#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "kplane/drawing.hpp"

namespace kplane {

// Face roles for the ring-extension search.  Active faces can push three
// units of dual flow to some potential final face and may receive new
// vertices.  Passive faces corner a frontier vertex and sit within two
// crossings of an active face, the first crossing away from that vertex's own
// edges.  Transit faces have a crossable way into an active face plus a
// second one into an active or passive face.  Everything else is irrelevant
// and gets evacuated.  Active must stay first: dart tags store the enum value
// and the extension search allows exactly tag 0.
enum class FaceClass : std::uint8_t { Active, Passive, Transit, Irrelevant };

struct FaceClassMap {
  FaceSet faces;
  std::vector<FaceClass> cls;         // per face
  std::vector<char> potential_final;  // per face; always a subset of Active
  bool dead = false;                  // no potential final face at all
  int parallel_arc_transits = 0;      // transit only if parallel arcs count twice
};

// Nodes carrying the frontier ring, in ring order: vertices 0..9.
// Throws std::logic_error if one of them is unplaced.
std::vector<int> frontier_nodes_of(const Drawing& d);

// True when every record joining consecutive frontier ring vertices is a
// single uncrossed segment.
bool frontier_ring_uncrossed(const Drawing& d);

// Faces that could host the last, uncrossable ring: ten units of flow from
// the frontier vertices reach the face, each vertex feeding one unit into
// one of its incident faces and every drawn edge carrying at most its
// remaining crossing budget.
std::vector<char> potential_final_faces(const Drawing& d, const FaceSet& faces,
                                        const std::vector<int>& frontier_nodes);

FaceClassMap classify_faces(const Drawing& d, const std::vector<int>& frontier_nodes);

// Plane drawing of the innermost uncrossable ring, vertices 0..9.
Drawing base_drawing();

// Relabels vertices: ring_nodes take labels 0..9 in the given order, the
// remaining vertices follow as 10.. in increasing old-label order.
void renumber_vertices(Drawing& d, const std::vector<int>& ring_nodes);

// Classifies with the ring at `first_new_vertex`.. as the frontier, drops the
// drawing when no face could host the final ring, otherwise evacuates the
// irrelevant region and renumbers so the frontier becomes 0..9.
std::optional<Drawing> reduce_child(const Drawing& raw, int first_new_vertex);

// Evacuates the irrelevant region of an already reduced drawing (frontier
// 0..9) and compacts the vertex labels.  Identity when nothing is irrelevant.
Drawing cleanup_drawing(const Drawing& d);

struct ExtensionStats {
  long long expansions = 0;
  long long completed = 0;  // raw completed drawings, before dedup
  long long dead = 0;       // children dropped for lacking a final face
  int parallel_arc_transits = 0;  // from the parent classification
};

struct ExtensionResult {
  std::vector<Drawing> children;  // cleaned, renumbered, one per class
  std::vector<std::string> keys;  // canonical keys, parallel and sorted
  ExtensionStats stats;
};

// Draws the next ring on top of `d`: ten new vertices, braid edge from
// frontier vertex j to new vertex j+8 (j even) or j+2 (j odd), then the new
// ring itself, uncrossable when asked.  New vertices land only in active
// faces.  `observer` sees every raw completed drawing before cleanup and
// forces single-threaded search.
ExtensionResult extend_with_cycle(const Drawing& d, bool uncrossable, int threads = 1,
                                  const std::function<void(const Drawing&)>& observer = {});

// True when an uncrossable next ring fits; stops at the first one found.
// `restricted` keeps the active-face placement rule; switching it off makes
// the probe independent of the face classification (used to cross-check that
// discarded drawings really admit no such ring).
bool final_cycle_fits(const Drawing& d, bool restricted = true, int threads = 1);

struct PipelineOptions {
  int max_iter = 0;      // levels to expand; ignored in closure mode
  bool closure = false;  // keep going until no new drawing class appears
  int threads = 1;
  std::string state_dir;  // persist and resume when nonempty
};

struct IterationStats {
  long long expansions = 0;  // search work spent expanding this level
  long long completed = 0;
  long long dead = 0;
  int new_classes = 0;  // drawing classes first discovered at this level
  int final_hits = 0;   // classes of this level admitting the uncrossable ring
};

struct PipelineReport {
  std::vector<IterationStats> iterations;  // [0] is the base ring
  int drawings = 0;                        // classes discovered, base included
  int final_hits = 0;
  int rotation_only_classes = 0;      // recount under even rotations only
  int mirror_quotient_classes = 0;    // recount with mirror images folded
  int mirror_quotient_final_hits = 0; // final hits with mirror images folded
  int uncrossed_frontier_classes = 0; // stored classes whose ring is uncrossed
  int mirror_quotient_uncrossed = 0;  // the same, with mirror images folded
  int parallel_arc_transits = 0;
  bool closed = false;  // a level came up empty (fixed point reached)
};

// Breadth-first closure over reduced drawings: start from the base ring,
// expand level by level with crossable rings, probe each expanded drawing
// (once per class, and only if it has children) for the uncrossable final
// ring.  Classes are merged by the frontier-cycle canonical key.
PipelineReport run_pipeline(const PipelineOptions& opt);

}  // namespace kplane
