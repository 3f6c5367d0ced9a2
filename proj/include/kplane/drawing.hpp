#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "kplane/graph.hpp"

namespace kplane {

// A drawing is stored as its planarization: an embedded multigraph on the
// sphere whose nodes are real vertices, crossing points, and (in reduced
// drawings) star hubs.  Rotations are doubly linked circular lists of darts
// per node; faces are orbits of phi(d) = next[twin[d]] and lie to the LEFT
// of their darts.

// Bend nodes are leftovers of region removal: former crossings or vertices
// that had to stay on the boundary of a relevant face but lost their own
// meaning.  Hub nodes are the centers of the stars that seal evacuated
// regions.
enum class NodeKind : std::uint8_t { Vertex, Crossing, Bend, Hub };

struct CrossingRef {
  std::int32_t edge_a = -1;  // drawing-edge ids, a < b not required
  std::int32_t edge_b = -1;
};

struct DrawingNode {
  std::int32_t any_dart = -1;
  std::int32_t degree = 0;
  NodeKind kind = NodeKind::Vertex;
  std::int32_t vertex = -1;  // graph vertex id when kind == Vertex
  CrossingRef cross;         // meaningful when kind == Crossing
};

struct DrawingEdge {
  std::int32_t gu = -1, gv = -1;        // graph endpoints (-1 for artifacts)
  std::int32_t from_node = -1, to_node = -1;
  std::int8_t fake = 0;                 // 0, or 2 for uncrossable edges
  std::int8_t budget = 2;               // crossings this edge may still take
  std::int8_t crossings = 0;
  bool drawn = false;
  bool artifact = false;                // hub spokes and other repair edges
  std::vector<std::int32_t> chain;      // forward darts from_node -> to_node
};

struct FaceSet {
  std::vector<std::int32_t> face_of;    // per dart
  std::vector<std::int32_t> start;      // least dart of each orbit
  std::vector<std::int32_t> size;
  int count() const { return static_cast<int>(start.size()); }
};

struct Drawing {
  int k = 2;  // crossings allowed per edge

  std::vector<std::int32_t> d_node, d_next, d_prev, d_twin, d_edge;
  std::vector<std::int32_t> d_tag;  // face-ancestry tag carried by each dart side
  std::vector<DrawingNode> nodes;
  std::vector<DrawingEdge> edges;
  std::vector<std::int32_t> vertex_node;  // graph vertex -> node id, -1 if unplaced

  int dart_count() const { return static_cast<int>(d_node.size()); }
  int node_count() const { return static_cast<int>(nodes.size()); }

  int new_node(NodeKind kind, int vertex = -1);
  int new_edge(int gu, int gv, int fake, bool artifact = false);
  int new_dart(int node, int edge, int tag = -1);
  void set_twins(int a, int b);

  // Rotation surgery.  All positions are counterclockwise; inserting into the
  // corner before `ref` places the dart between prev[ref] and ref.
  void attach_first(int dart);                // dart's node must be isolated
  void insert_before(int dart, int ref);
  void detach(int dart);                      // inverse of either of the above

  int next_at(int d) const { return d_next[d]; }
  int prev_at(int d) const { return d_prev[d]; }
  int twin(int d) const { return d_twin[d]; }
  int phi(int d) const { return d_next[d_twin[d]]; }

  // Other endpoint's node of the segment containing dart d.
  int head(int d) const { return d_node[d_twin[d]]; }

  std::vector<int> rotation(int node) const;  // darts ccw starting at any_dart

  int ensure_vertex_slot(int gv);             // grows vertex_node as needed
};

// Single drawn edge between two fresh vertices; the unique drawing of K2.
Drawing init_drawing(const LabeledGraph& g, int edge_id, int tag = 0);

// Prepares edge records (undrawn) for every graph edge, no darts yet.
Drawing empty_drawing(const LabeledGraph& g);

FaceSet compute_faces(const Drawing& d);

// Walks face orbit of `start`; darts in phi order.
std::vector<int> face_boundary(const Drawing& d, int start);

struct ValidationError {
  std::string what;
};

// Checks structural soundness: twin involution, rotation list integrity,
// crossing alternation, per-edge crossing/budget/fake accounting, chain
// consistency, pairwise simplicity, connectivity and V - E + F = 2.
// `reduced` relaxes per-edge accounting for drawings that went through
// region removal (edges may survive as partial chains).
std::vector<ValidationError> validate_drawing(const Drawing& d, bool reduced = false);
bool drawing_ok(const Drawing& d, bool reduced = false);

// Crossing pairs as (edge_a, edge_b, index_a, index_b) with edge_a < edge_b
// and index_* the crossing's position along each edge's chain, recomputed
// from the chains.  Deterministic order; full drawings only.
std::vector<std::array<int, 4>> crossing_list(const Drawing& d);

// Rebuilds `d` with every irrelevant face evacuated.  `face_relevant` is
// indexed by face id (as in compute_faces), `node_is_frontier` by node id.
// Nodes that see no relevant face disappear; degree-2 leftovers between two
// stretches of the same surviving edge are smoothed away unless that would
// shrink a relevant face below a triangle.  Former crossings that keep all
// four strands stay crossings, every other survivor becomes a Bend, and each
// evacuated region is sealed with a star: a fresh Hub joined by uncrossable
// spokes to every corner of the rebuilt face.  Throws std::logic_error if a
// frontier vertex would lose its last relevant face.  The result validates
// as a reduced drawing.
Drawing remove_region(const Drawing& d, const std::vector<char>& face_relevant,
                      const std::vector<char>& node_is_frontier);

}  // namespace kplane
