#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kplane/drawing.hpp"
#include "kplane/graph.hpp"
#include "kplane/search.hpp"

namespace kplane {

// Audits run on full drawings (every record drawn, no artifacts) and verify
// the structural consequences of admissibility, execute the halfedge
// charging scheme, and evaluate the degree-count inequalities behind the
// density bound m >= 2n.  Violations are collected as witness strings and
// never swallowed; on inputs that are not admissible drawings of maximal
// graphs the reports are informational.

constexpr int high_degree = 5;  // smallest degree that counts as high

// A halfedge is an edge's incidence at one endpoint.  Encoded as
// 2 * edge + side with side 1 at the edge's gv endpoint.
int halfedge_at(const Drawing& d, int edge, int vertex);
int halfedge_vertex(const Drawing& d, int halfedge);  // vertex it sits at
int halfedge_other(const Drawing& d, int halfedge);   // far endpoint
std::string halfedge_name(const Drawing& d, int halfedge);

// ---------------------------------------------------------------------------
// Vertex classification

enum class VertexKind : std::uint8_t {
  Hermit,       // degree two
  T3_1,         // degree three, exactly one incident edge uncrossed
  T3_2,         // degree three, exactly two incident edges uncrossed
  T3_3Hermit,   // degree three, all uncrossed, with a degree-three neighbor
  T3_3Mingler,  // degree three, all uncrossed, no degree-three neighbor
  T4H,          // degree four with a hermit neighbor
  Plain4,       // degree four without hermit neighbors
  High,         // degree five and up
  Degenerate,   // degree below two (never occurs in maximal inputs)
};

const char* vertex_kind_name(VertexKind k);

struct VertexClass {
  VertexKind kind = VertexKind::Degenerate;
  int vertex = -1;
  int degree = 0;
  std::vector<int> uncrossed;  // incident edge ids without crossings
  std::vector<int> crossed;    // incident edge ids with crossings
  // Evidence, filled where the kind defines it.
  int host_edge = -1;      // Hermit: edge joining its two neighbors, -1 if absent
  int partner = -1;        // T3_3Hermit: partner vertex; T4H: the hermit neighbor
  int anchor = -1;         // T3_1/T3_2: neighbor carrying the claims;
                           // T4H: the hermit's other neighbor
  int crossing_edge = -1;  // T3_2: the edge crossing its crossed edge
  int far_end = -1;        // T3_2: that edge's endpoint away from the anchor
};

VertexClass classify_vertex(const Drawing& d, int v);
std::vector<VertexClass> classify_vertices(const Drawing& d);

// ---------------------------------------------------------------------------
// Structural checks

struct PredicateResult {
  std::string name;
  int subjects = 0;  // instances inspected
  bool pass = true;
  std::vector<std::string> witnesses;  // one line per failure
};

struct StructuralReport {
  std::vector<PredicateResult> checks;
  bool all_pass = true;
};

// Thirteen mechanical consequences of admissibility for maximal graphs:
// common-face pairs are adjacent through uncrossed edges, every vertex has
// an uncrossed edge, 2-connectivity, the hermit triangle, one hermit per
// host edge, hermit neighbor degrees, the floor(i/3) hermit quota, the
// doubly crossed structure at T4H and T3-1 vertices, the T3-2 crossing
// pattern and degrees, pairing of adjacent all-uncrossed degree-three
// vertices, and the mingler degree condition.  A failing check certifies
// that the drawing is not an admissible drawing of a maximal graph.
StructuralReport structural_report(const Drawing& d);

// ---------------------------------------------------------------------------
// Charging scheme

enum class ClaimRule : std::uint8_t {
  C1,    // hermit pair at a high-degree neighbor: own halfedge + host halfedge
  C2,    // degree-three triple at one high-degree neighbor
  C3,    // doubly crossed pair claimed by a degree-four vertex with a hermit
  T3_2,  // peripheral halfedge chosen during resolution
  T3_3,  // peripheral pair chosen during resolution
};

struct Claim {
  int claimant = -1;  // graph vertex, -1 when the halfedge is free
  ClaimRule rule = ClaimRule::C1;
};

struct T32Assessment {
  int vertex = -1;
  int anchor = -1;           // high-degree neighbor carrying all three claims
  std::vector<int> options;  // assessed peripheral halfedges at the anchor
  int chosen = -1;           // set by resolve_claims
};

struct T33Assessment {
  int vertex = -1;           // a mingler (paired degree-three claims are fixed)
  std::vector<int> assessed; // every qualifying halfedge of an edge between
                             // two of its neighbors
  int anchor = -1;           // set by resolve_claims
  std::vector<int> chosen;   // the two peripheral halfedges claimed
};

struct ClaimLedger {
  int halfedge_count = 0;
  std::vector<Claim> claims;         // indexed by halfedge id
  std::vector<VertexClass> classes;  // classification the ledger was built on
  std::vector<T32Assessment> t32;
  std::vector<T33Assessment> t33;
  std::vector<std::string> violations;
  bool resolved = false;

  bool claim(int halfedge, int vertex, ClaimRule rule);  // false on collision
};

// Records the fixed claims (hermits, T3-1, T4H, paired degree-three
// vertices) and the assessment sets of T3-2 vertices and minglers.  A
// halfedge of an edge between two neighbors of a low-degree vertex is
// assessable when it sits at a high-degree vertex and the far endpoint has
// degree at least four; a T3-2 vertex assesses only the qualifying halfedges
// at its anchor, a mingler every qualifying halfedge among its neighbors.
ClaimLedger assessments(const Drawing& d);

// Resolves the assessed claims deterministically: greedy chains started at
// T3-2 vertices (claiming the lexicographically smallest open option),
// then cycles of tricky minglers around a shared high-degree vertex with
// separate even and odd schedules, then the remaining easy minglers last,
// by exact search over their anchor choices with smallest anchors first.
// Ties break by vertex id throughout.  Structural deviations from the
// expected shape are recorded in `violations`; resolution continues
// best-effort so every deviation surfaces.
ClaimLedger resolve_claims(const Drawing& d, ClaimLedger ledger);

struct LedgerCheck {
  bool quotas_met = true;     // every low-degree and T4H vertex claims its due
  bool assessors_ok = true;   // every edge assessed by at most two vertices
  bool degree5_rule = true;   // a degree-five vertex serves at most one
                              // low-degree claimant
  bool no_violations = true;  // ledger carried no violation strings
  std::vector<std::string> witnesses;
  bool all() const {
    return quotas_met && assessors_ok && degree5_rule && no_violations;
  }
};

LedgerCheck check_ledger(const Drawing& d, const ClaimLedger& ledger);

// ---------------------------------------------------------------------------
// Degree counts and inequalities

struct DegreeProfile {
  int n = 0, m = 0;
  std::vector<int> by_degree;  // index = degree
  std::vector<std::vector<int>> refined;  // [degree][adjacent hermit count]
};

DegreeProfile degree_profile(const Drawing& d);

struct InequalityCheck {
  std::string name;
  double lhs = 0, rhs = 0;
  bool holds = false;  // rhs - lhs >= 0
};

struct InequalityReport {
  DegreeProfile profile;
  bool handshake_ok = false;   // 2m equals the degree sum
  bool refinement_ok = false;  // every by_degree entry equals its refined sum
  bool identity_ok = false;    // 2(m - 2n) equals sum (i - 4) v_i
  std::vector<InequalityCheck> checks;  // hermit capacity, triple capacity,
                                        // combined capacity
  bool all_hold = false;
  std::string note;  // set when a violation implies non-maximality
};

// Evaluates the counting identities and the three service-capacity
// inequalities exactly as stated, with refined counts up to degree nine and
// the floor(i/3) tail from degree ten on.  Negative slack on a maximal
// graph's admissible drawing would be a counterexample; on other inputs it
// flags non-maximality.
InequalityReport degree_inequalities(const Drawing& d);

// ---------------------------------------------------------------------------
// Admissible drawings and verdicts

struct AdmissibleSet {
  std::vector<Drawing> drawings;  // labeled classes, sorted by key
  std::vector<std::string> keys;
  int crossings = -1;        // crossing count shared by all kept drawings
  int doubly_crossed = -1;   // doubly crossed edge count shared by all
  std::uint64_t expansions = 0;
  bool inconclusive = false;  // budget ran out; the set may be incomplete
};

// All labeled 2-plane drawings with the minimum number of crossings and,
// among those, the minimum number of doubly crossed edges.  Branch and
// bound over partial drawings; both quantities only grow as edges are
// inserted, so pruning at the incumbent is exact.
AdmissibleSet admissible_drawings(const LabeledGraph& g,
                                  std::uint64_t max_expansions = 0);

enum class Verdict : std::uint8_t { Pass, Fail, Inconclusive };

struct DensityVerdict {
  Verdict outcome = Verdict::Inconclusive;
  TriState maximal = TriState::Unknown;
  int n = 0, m = 0, margin = 0;  // margin = m - 2n
  std::string note;
};

// Certifies maximality by exhaustive search, then checks m >= 2n.  A capped
// or failed maximality check downgrades the verdict to Inconclusive or
// reports the graph as not maximal in `note`.
DensityVerdict density_verdict(const LabeledGraph& g,
                               std::uint64_t max_expansions = 0,
                               int threads = 1);

// ---------------------------------------------------------------------------
// Whole-graph audit

struct RerouteCheck {
  int checked = 0;
  bool ok = true;
  std::vector<std::string> witnesses;
};

// For every T3-2 vertex of every drawing in the set: some drawing in the set
// shows the same vertex as T3-2 with the crossing moved to its other
// candidate edge.  Membership check only; no redrawing is performed.
RerouteCheck t32_reroute_check(const AdmissibleSet& adm);

struct AuditOptions {
  bool all_admissible = true;     // audit every admissible drawing, not one
  std::uint64_t max_expansions = 0;
  int threads = 1;
  bool with_density = true;       // also run the maximality-backed verdict
  std::uint64_t density_expansions = 0;
};

struct DrawingAudit {  // parallel to AdmissibleSet::drawings
  StructuralReport structure;
  ClaimLedger ledger;
  LedgerCheck ledger_check;
  InequalityReport inequalities;
};

struct GraphAudit {
  AdmissibleSet admissible;
  std::vector<DrawingAudit> drawings;
  RerouteCheck reroute;
  DensityVerdict density;
  bool clean = true;  // everything above passed (density counted when run)
};

GraphAudit audit_graph(const LabeledGraph& g, const AuditOptions& opt = {});

}  // namespace kplane
