#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "kplane/search.hpp"

namespace kplane {

// Vertex pairs (u < v) that are placed in d, joined by no edge record
// (artifact records count as adjacency), and insertable with at most k
// crossings.  A pair counts as insertable only if some plan survives the
// sphericity check, not merely if a plan exists on paper.
std::vector<std::pair<int, int>> addable_edges(const Drawing& d, int k);

// True iff no edge can be added to the drawing with at most k crossings.
bool drawing_saturated(const Drawing& d, int k);

// True iff g + uv is not k-planar for every non-edge uv.  Each candidate is
// decided by exhaustive enumeration capped at max_expansions (0 = unlimited);
// a capped-out candidate makes the overall answer Unknown rather than a
// guess.  Candidates are checked in parallel when threads > 1.
TriState graph_maximal(const LabeledGraph& g, int k, std::uint64_t max_expansions = 0,
                       int threads = 1);

// True iff every dual path from a face incident to u to a face incident to v
// crosses an edge with no remaining crossing budget.  u, v must be placed
// and non-adjacent.
bool doubly_crossed_separation(const Drawing& d, int u, int v);

}  // namespace kplane
