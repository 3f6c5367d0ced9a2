#include "kplane/drawing.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace kplane {

namespace {

enum class Fate : char { Delete, Keep, Smooth };

// A maximal stretch of surviving segments joined across smoothed nodes,
// running from one kept node to another.  Becomes a single dart pair in the
// rebuilt drawing.
struct SuperSeg {
  std::vector<int> fwd;  // original forward darts in trace order
  int edge = -1;         // original edge when the stretch stays on one, else -1
  int rec = -1;          // rebuilt record id
  int new_at_tail = -1;  // rebuilt dart at the trace tail node
  int new_at_head = -1;  // rebuilt dart at the trace head node
};

}  // namespace

Drawing remove_region(const Drawing& d, const std::vector<char>& face_relevant,
                      const std::vector<char>& node_is_frontier) {
  FaceSet faces = compute_faces(d);
  if (static_cast<int>(face_relevant.size()) != faces.count())
    throw std::invalid_argument("remove_region: face mask does not match face count");

  bool any_irrelevant = false;
  for (char c : face_relevant) any_irrelevant |= !c;
  if (!any_irrelevant) return d;

  int nd = d.dart_count();
  int nn = d.node_count();
  auto rel = [&](int x) { return face_relevant[faces.face_of[x]] != 0; };

  // A segment survives iff at least one of its two sides is relevant.
  std::vector<char> alive(nd, 0);
  for (int x = 0; x < nd; ++x) alive[x] = rel(x) || rel(d.d_twin[x]) ? 1 : 0;

  auto frontier = [&](int v) {
    return v < static_cast<int>(node_is_frontier.size()) && node_is_frontier[v];
  };

  // Node fates.  A node stays if it is a frontier vertex, touches two or more
  // relevant faces, or keeps a shape the boundary needs (degree other than
  // two, or smoothing would shrink its relevant face below a triangle).
  std::vector<Fate> fate(nn, Fate::Delete);
  std::vector<int> smooth_face(nn, -1);
  for (int v = 0; v < nn; ++v) {
    if (d.nodes[v].any_dart < 0) continue;
    int sdeg = 0;
    std::vector<int> rf;
    for (int x : d.rotation(v)) {
      if (alive[x]) ++sdeg;
      if (rel(x)) rf.push_back(faces.face_of[x]);
    }
    std::sort(rf.begin(), rf.end());
    rf.erase(std::unique(rf.begin(), rf.end()), rf.end());
    if (frontier(v)) {
      if (sdeg == 0)
        throw std::logic_error("remove_region: frontier vertex loses every relevant face");
      fate[v] = Fate::Keep;
    } else if (sdeg == 0) {
      fate[v] = Fate::Delete;
    } else if (rf.size() >= 2 || sdeg != 2) {
      fate[v] = Fate::Keep;
    } else {
      fate[v] = Fate::Smooth;
      smooth_face[v] = rf[0];
    }
  }
  // Lens prevention: smooth a candidate only while its face keeps at least
  // three corners.  All darts of a relevant face survive, so the face starts
  // at its full original length.
  std::vector<int> flen(faces.size.begin(), faces.size.end());
  for (int v = 0; v < nn; ++v) {
    if (fate[v] != Fate::Smooth) continue;
    int f = smooth_face[v];
    int corners = 0;
    for (int x : d.rotation(v))
      if (faces.face_of[x] == f) ++corners;
    if (flen[f] - corners >= 3)
      flen[f] -= corners;
    else
      fate[v] = Fate::Keep;
  }

  // Trace the surviving strands from kept node to kept node.
  std::vector<int> sseg_of(nd, -1);
  std::vector<char> trace_fwd(nd, 0);
  std::vector<SuperSeg> segs;
  for (int z0 = 0; z0 < nd; ++z0) {
    if (!alive[z0] || sseg_of[z0] >= 0) continue;
    if (fate[d.d_node[z0]] != Fate::Keep) continue;
    SuperSeg s;
    s.edge = d.d_edge[z0];
    int id = static_cast<int>(segs.size());
    int z = z0;
    int steps = 0;
    for (;;) {
      if (++steps > nd)
        throw std::logic_error("remove_region: strand trace does not terminate");
      sseg_of[z] = sseg_of[d.d_twin[z]] = id;
      trace_fwd[z] = 1;
      s.fwd.push_back(z);
      if (d.d_edge[z] != s.edge) s.edge = -1;
      int w = d.head(z);
      if (fate[w] == Fate::Keep) break;
      if (fate[w] == Fate::Delete)
        throw std::logic_error("remove_region: surviving strand ends at a deleted node");
      int nxt = -1;
      for (int y : d.rotation(w))
        if (alive[y] && y != d.d_twin[z]) nxt = y;
      if (nxt < 0)
        throw std::logic_error("remove_region: smoothed node lost its continuation");
      z = nxt;
    }
    segs.push_back(std::move(s));
  }
  for (int x = 0; x < nd; ++x)
    if (alive[x] && sseg_of[x] < 0)
      throw std::logic_error("remove_region: surviving strand closed into a loop");

  // Rebuilt nodes, in original id order.  Former crossings start as bends and
  // are restored below when both of their edges truly pass through.
  Drawing out;
  out.k = d.k;
  out.vertex_node.assign(d.vertex_node.size(), -1);
  std::vector<int> node_map(nn, -1);
  for (int v = 0; v < nn; ++v) {
    if (fate[v] != Fate::Keep) continue;
    NodeKind kind = d.nodes[v].kind;
    if (kind == NodeKind::Crossing) kind = NodeKind::Bend;
    node_map[v] = out.new_node(kind, d.nodes[v].vertex);
    if (kind == NodeKind::Vertex && d.nodes[v].vertex >= 0)
      out.vertex_node[d.nodes[v].vertex] = node_map[v];
  }

  // Group the strands into records.  Stretches that stay on one original
  // edge are merged along its chain and inherit its budget; mixed stretches
  // become uncrossable artifact records.
  struct RunPart {
    int sseg;
    bool aligned;  // trace direction matches the chain direction
  };
  struct RecInfo {
    std::vector<RunPart> parts;
    int from_node = -1, to_node = -1;  // original node ids
    int fake = 0, budget = 0;
    bool artifact = false;
  };
  auto part_tail = [&](const RunPart& p) {
    const SuperSeg& s = segs[p.sseg];
    return p.aligned ? d.d_node[s.fwd.front()] : d.head(s.fwd.back());
  };
  auto part_head = [&](const RunPart& p) {
    const SuperSeg& s = segs[p.sseg];
    return p.aligned ? d.head(s.fwd.back()) : d.d_node[s.fwd.front()];
  };
  std::vector<RecInfo> recs;
  for (int e = 0; e < static_cast<int>(d.edges.size()); ++e) {
    const DrawingEdge& er = d.edges[e];
    if (!er.drawn) continue;
    int m = static_cast<int>(er.chain.size());
    int i = 0;
    while (i < m) {
      int x = er.chain[i];
      if (!alive[x] || segs[sseg_of[x]].edge != e) {
        ++i;
        continue;
      }
      RecInfo r;
      r.fake = er.fake;
      r.budget = er.budget;
      r.artifact = er.artifact;
      while (i < m) {
        int xx = er.chain[i];
        if (!alive[xx] || segs[sseg_of[xx]].edge != e) break;
        if (r.parts.empty() || r.parts.back().sseg != sseg_of[xx])
          r.parts.push_back({sseg_of[xx], trace_fwd[xx] != 0});
        ++i;
      }
      r.from_node = part_tail(r.parts.front());
      r.to_node = part_head(r.parts.back());
      recs.push_back(std::move(r));
    }
  }
  for (int s = 0; s < static_cast<int>(segs.size()); ++s) {
    if (segs[s].edge >= 0) continue;
    RecInfo r;
    r.fake = 2;
    r.budget = 0;
    r.artifact = true;
    r.parts.push_back({s, true});
    r.from_node = d.d_node[segs[s].fwd.front()];
    r.to_node = d.head(segs[s].fwd.back());
    recs.push_back(std::move(r));
  }
  for (int ri = 0; ri < static_cast<int>(recs.size()); ++ri)
    for (const RunPart& p : recs[ri].parts) segs[p.sseg].rec = ri;

  // Restore crossing nodes where all four strands survive, both edges pass
  // through as whole records, and no corner borders an evacuated region (a
  // star spoke would otherwise land here and break the degree-four shape).
  for (int v = 0; v < nn; ++v) {
    if (fate[v] != Fate::Keep || d.nodes[v].kind != NodeKind::Crossing) continue;
    auto rot = d.rotation(v);
    if (rot.size() != 4) continue;
    bool clean = true;
    for (int x : rot) clean = clean && rel(x);
    if (!clean) continue;
    int r0 = segs[sseg_of[rot[0]]].rec;
    int r1 = segs[sseg_of[rot[1]]].rec;
    if (r0 != segs[sseg_of[rot[2]]].rec || r1 != segs[sseg_of[rot[3]]].rec || r0 == r1)
      continue;
    DrawingNode& n = out.nodes[node_map[v]];
    n.kind = NodeKind::Crossing;
    n.cross = {r0, r1};
  }

  // Materialize records and their darts.
  std::vector<int> dart_map(nd, -1);
  for (const RecInfo& r : recs) {
    int rid = out.new_edge(-1, -1, r.fake, r.artifact);
    DrawingEdge& rec = out.edges[rid];
    rec.budget = static_cast<std::int8_t>(r.budget);
    rec.drawn = true;
    rec.from_node = node_map[r.from_node];
    rec.to_node = node_map[r.to_node];
    const DrawingNode& fn = out.nodes[rec.from_node];
    const DrawingNode& tn = out.nodes[rec.to_node];
    rec.gu = fn.kind == NodeKind::Vertex ? fn.vertex : -1;
    rec.gv = tn.kind == NodeKind::Vertex ? tn.vertex : -1;
    int crossings = 0;
    for (std::size_t j = 0; j < r.parts.size(); ++j) {
      SuperSeg& s = segs[r.parts[j].sseg];
      int na = out.new_dart(node_map[d.d_node[s.fwd.front()]], rid);
      int nb = out.new_dart(node_map[d.head(s.fwd.back())], rid);
      out.set_twins(na, nb);
      s.new_at_tail = na;
      s.new_at_head = nb;
      dart_map[s.fwd.front()] = na;
      dart_map[d.d_twin[s.fwd.back()]] = nb;
      rec.chain.push_back(r.parts[j].aligned ? na : nb);
      if (j > 0 && out.nodes[node_map[part_tail(r.parts[j])]].kind == NodeKind::Crossing)
        ++crossings;
    }
    rec.crossings = static_cast<std::int8_t>(crossings);
  }

  // Rotations survive in their original cyclic order.
  for (int v = 0; v < nn; ++v) {
    if (fate[v] != Fate::Keep) continue;
    int first = -1;
    for (int x : d.rotation(v)) {
      if (!alive[x]) continue;
      int nx = dart_map[x];
      if (nx < 0)
        throw std::logic_error("remove_region: surviving dart lost its image");
      if (first < 0) {
        out.attach_first(nx);
        first = nx;
      } else {
        out.insert_before(nx, first);
      }
    }
  }

  // Sides that bordered an irrelevant face now border an evacuated region.
  std::vector<char> left_rel(out.dart_count(), 0);
  for (const SuperSeg& s : segs) {
    left_rel[s.new_at_tail] = rel(s.fwd.front()) ? 1 : 0;
    left_rel[s.new_at_head] = rel(d.d_twin[s.fwd.back()]) ? 1 : 0;
  }

  // Seal every evacuated region with a star: one hub, an uncrossable spoke
  // into each corner of the region.
  FaceSet nf = compute_faces(out);
  for (int f = 0; f < nf.count(); ++f) {
    if (left_rel[nf.start[f]]) continue;
    std::vector<int> walk = face_boundary(out, nf.start[f]);
    for (int w : walk)
      if (left_rel[w])
        throw std::logic_error("remove_region: evacuated region borders a kept face");
    int h = out.new_node(NodeKind::Hub);
    int prev_spoke = -1;
    for (std::size_t i = 0; i < walk.size(); ++i) {
      int anchor = walk[(i + 1) % walk.size()];
      int sid = out.new_edge(-1, -1, 2, true);
      int sh = out.new_dart(h, sid);
      int sc = out.new_dart(out.d_node[anchor], sid);
      out.set_twins(sh, sc);
      out.insert_before(sc, anchor);
      if (prev_spoke < 0)
        out.attach_first(sh);
      else
        out.insert_before(sh, prev_spoke);
      prev_spoke = sh;
      DrawingEdge& sp = out.edges[sid];
      sp.drawn = true;
      sp.from_node = h;
      sp.to_node = out.d_node[sc];
      sp.chain = {sh};
    }
  }

  auto errs = validate_drawing(out, true);
  if (!errs.empty())
    throw std::logic_error("remove_region: rebuilt drawing invalid: " + errs.front().what);
  return out;
}

}  // namespace kplane
