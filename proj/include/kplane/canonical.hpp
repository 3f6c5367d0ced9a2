#pragma once

#include <string>
#include <vector>

#include "kplane/drawing.hpp"

namespace kplane {

// Exact identity of a labeled drawing: vertex labels and edge identities are
// fixed, crossing points are anonymous, orientation is NOT quotiented (mirror
// images get distinct keys).  Two complete drawings of the same graph receive
// equal keys iff their rotation systems agree after renaming crossings.
std::string labeled_key(const Drawing& d);

// Quotients labeled_key by graph automorphisms and by orientation.  Needs the
// underlying graph to relabel edge identities; practical for n <= 10.
std::string canonical_key(const Drawing& d, const LabeledGraph& g);

// Relabelings of a distinguished cycle tried by cycle_canonical_key.
// Braided keeps exactly the self-maps that extend over a braided matching
// attached to the cycle: even rotations, which preserve the surface
// orientation, and odd-offset reflections, which reverse it (order ten for
// a ten-cycle; the orientation bit is forced by the map).  BraidedMirrored
// additionally folds mirror images together regardless of the map, and
// EvenRotations is the strict orientation-preserving subgroup of Braided.
// Dihedral tries the full dihedral group with both orientations.
enum class CycleMaps { Dihedral, Braided, EvenRotations, BraidedMirrored };

// Canonical form of a (possibly reduced) drawing relative to a distinguished
// cycle of vertex nodes, given in cyclic order.  Candidate relabelings and
// orientations are chosen per `maps`.  Vertex labels off the cycle are
// ignored; edges carry (budget, fake, artifact) colors.
std::string cycle_canonical_key(const Drawing& d, const std::vector<int>& cycle_nodes,
                                CycleMaps maps);

}  // namespace kplane
