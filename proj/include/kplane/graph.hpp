#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace kplane {

enum class EdgeTag : uint8_t { Plain, CycleEdge, Matching, LengthTwo, Gadget };

struct EdgeInfo {
    int u = -1, v = -1;  // u < v
    EdgeTag tag = EdgeTag::Plain;
    int tag_a = 0;  // CycleEdge: ring index; Matching: lower ring; LengthTwo: ring; Gadget: copy
    int tag_b = 0;  // Matching: upper ring
    bool uncrossable = false;
};

// Simple undirected graph with string labels and per-edge metadata.
// Edge order is preserved as built/parsed so that file round-trips are exact.
struct LabeledGraph {
    std::vector<std::string> labels;
    std::vector<EdgeInfo> edges;

    int n() const { return static_cast<int>(labels.size()); }
    int m() const { return static_cast<int>(edges.size()); }

    int add_vertex(std::string label);
    int add_edge(int u, int v, EdgeTag tag = EdgeTag::Plain, int tag_a = 0, int tag_b = 0,
                 bool uncrossable = false);

    bool has_edge(int u, int v) const;
    int edge_index(int u, int v) const;  // -1 if absent
    int degree(int v) const;
    std::vector<std::vector<int>> adjacency() const;          // neighbor vertex ids, sorted
    std::vector<std::vector<int>> incident_edges() const;     // edge indices per vertex
    bool connected() const;                                   // ignores isolated-free requirement
    std::vector<std::vector<int>> components() const;         // vertex ids per component

    LabeledGraph induced(const std::vector<int>& verts) const;
};

LabeledGraph gen_path(int len);
LabeledGraph gen_cycle(int len, bool uncrossable = false);
LabeledGraph gen_complete(int n);

// Dense 9-vertex gadget: K9 minus {x2x3, x4x5, x6x8, x7x8}.
// Degrees (8,8,7,7,7,7,7,7,6); x6 and x7 are the non-neighbors of x8.
LabeledGraph gen_gadget_x();

// Gadget plus a tenth vertex adjacent to exactly x3, x4 and x6.
LabeledGraph gen_x_plus();

// K9 with the given edges removed (at most 4; edges must exist and be distinct).
LabeledGraph gen_k9_minus(const std::vector<std::pair<int, int>>& removed);

// Full sparse family: k nested ten-cycles, braided matchings between consecutive
// rings, a gadget on every edge of the first and last ring, and the length-two
// chords on those two rings. |V| = 10k + 140, |E| = 20k + 630.
LabeledGraph gen_gk(int k);

// Cycles plus matchings only. Ring 1 is uncrossable; ring k too if last_uncrossable.
LabeledGraph gen_gk_minus(int k, bool last_uncrossable);

// Braided matching partner on the next ring for position j (mod 10):
// even j goes to j+8, odd j goes to j+2.
int braid_partner(int j);

// Text format: header "n <count>", then one edge per line "u v" or "u v !".
std::string write_edge_list(const LabeledGraph& g);
LabeledGraph read_edge_list(std::istream& in);
LabeledGraph read_edge_list(const std::string& text);
LabeledGraph read_edge_list_file(const std::string& path);

// All automorphisms as permutation vectors (brute force; intended for n <= 10).
std::vector<std::vector<int>> automorphisms(const LabeledGraph& g);

// Canonical key under vertex relabeling (brute force for n <= 8).
std::string iso_canonical_key(const LabeledGraph& g);

// All connected graphs with up to max_edges edges, one per isomorphism class.
std::vector<LabeledGraph> connected_graphs_up_to_edges(int max_edges);

// All graphs (connected or not, no isolated-vertex pruning) on exactly n
// vertices, one per isomorphism class.
std::vector<LabeledGraph> all_graphs_on(int n);

}  // namespace kplane
