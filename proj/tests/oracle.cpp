#include "oracle.hpp"

#include <algorithm>
#include <functional>

#include "kplane/canonical.hpp"
#include "kplane/drawing.hpp"

using namespace kplane;

namespace oracle {

namespace {

struct Setup {
  const LabeledGraph* g;
  std::vector<std::pair<int, int>> pairs;        // crossable independent edge pairs
  std::vector<std::vector<int>> incident;        // edge ids per vertex
};

Drawing build(const Setup& su, const std::vector<std::vector<int>>& edge_crossings,
              const std::vector<int>& chosen, const std::vector<char>& chirality,
              const std::vector<std::vector<int>>& vertex_order) {
  const LabeledGraph& g = *su.g;
  Drawing d = empty_drawing(g);
  for (int v = 0; v < g.n(); ++v) d.vertex_node[v] = d.new_node(NodeKind::Vertex, v);

  std::vector<int> cross_node(chosen.size());
  for (std::size_t ci = 0; ci < chosen.size(); ++ci) {
    auto [e, f] = su.pairs[chosen[ci]];
    int c = d.new_node(NodeKind::Crossing);
    d.nodes[c].cross = {e, f};
    cross_node[ci] = c;
  }

  for (int e = 0; e < g.m(); ++e) {
    DrawingEdge& rec = d.edges[e];
    std::vector<int> pts{d.vertex_node[g.edges[e].u]};
    for (int ci : edge_crossings[e]) pts.push_back(cross_node[ci]);
    pts.push_back(d.vertex_node[g.edges[e].v]);
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
      int fwd = d.new_dart(pts[i], e);
      int bwd = d.new_dart(pts[i + 1], e);
      d.set_twins(fwd, bwd);
      rec.chain.push_back(fwd);
    }
    rec.from_node = pts.front();
    rec.to_node = pts.back();
    rec.drawn = true;
    rec.crossings = static_cast<std::int8_t>(edge_crossings[e].size());
    rec.budget = static_cast<std::int8_t>(2 - rec.fake - rec.crossings);
  }

  auto link_cycle = [&](int node, const std::vector<int>& cyc) {
    for (std::size_t j = 0; j < cyc.size(); ++j) {
      int a = cyc[j], b = cyc[(j + 1) % cyc.size()];
      d.d_next[a] = b;
      d.d_prev[b] = a;
    }
    d.nodes[node].any_dart = cyc.front();
    d.nodes[node].degree = static_cast<int>(cyc.size());
  };

  for (int v = 0; v < g.n(); ++v) {
    std::vector<int> cyc;
    for (int e : vertex_order[v]) {
      const DrawingEdge& rec = d.edges[e];
      cyc.push_back(g.edges[e].u == v ? rec.chain.front() : d.d_twin[rec.chain.back()]);
    }
    link_cycle(d.vertex_node[v], cyc);
  }

  for (std::size_t ci = 0; ci < chosen.size(); ++ci) {
    auto [e, f] = su.pairs[chosen[ci]];
    const auto& ce = edge_crossings[e];
    const auto& cf = edge_crossings[f];
    int ie = static_cast<int>(std::find(ce.begin(), ce.end(), static_cast<int>(ci)) -
                              ce.begin());
    int jf = static_cast<int>(std::find(cf.begin(), cf.end(), static_cast<int>(ci)) -
                              cf.begin());
    const auto& che = d.edges[e].chain;
    const auto& chf = d.edges[f].chain;
    int e_back = d.d_twin[che[ie]], e_fwd = che[ie + 1];
    int f_back = d.d_twin[chf[jf]], f_fwd = chf[jf + 1];
    if (chirality[ci])
      link_cycle(cross_node[ci], {e_back, f_fwd, e_fwd, f_back});
    else
      link_cycle(cross_node[ci], {e_back, f_back, e_fwd, f_fwd});
  }
  return d;
}

void enumerate(const LabeledGraph& g, const std::function<void(const Drawing&)>& sink) {
  Setup su;
  su.g = &g;
  for (int e = 0; e < g.m(); ++e) {
    if (g.edges[e].uncrossable) continue;
    for (int f = e + 1; f < g.m(); ++f) {
      if (g.edges[f].uncrossable) continue;
      const EdgeInfo& a = g.edges[e];
      const EdgeInfo& b = g.edges[f];
      if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) continue;
      su.pairs.push_back({e, f});
    }
  }
  su.incident = g.incident_edges();

  std::vector<int> load(g.m(), 0);
  std::vector<int> chosen;

  auto finish = [&](const std::vector<int>& sel) {
    // Crossings along each edge, initially in selection order.
    std::vector<std::vector<int>> ec(g.m());
    for (std::size_t ci = 0; ci < sel.size(); ++ci) {
      auto [e, f] = su.pairs[sel[ci]];
      ec[e].push_back(static_cast<int>(ci));
      ec[f].push_back(static_cast<int>(ci));
    }
    std::vector<int> two;  // edges whose crossing order is a real choice
    for (int e = 0; e < g.m(); ++e)
      if (ec[e].size() == 2) two.push_back(e);

    std::vector<std::vector<int>> vorder(g.n());
    std::function<void(int)> pick_rotation = [&](int v) {
      if (v == g.n()) {
        for (unsigned cm = 0; cm < (1u << sel.size()); ++cm) {
          std::vector<char> chir(sel.size());
          for (std::size_t ci = 0; ci < sel.size(); ++ci) chir[ci] = (cm >> ci) & 1;
          Drawing d = build(su, ec, sel, chir, vorder);
          if (drawing_ok(d)) sink(d);
        }
        return;
      }
      std::vector<int> inc = su.incident[v];
      std::sort(inc.begin(), inc.end());
      // First incident edge pinned: rotations are circular orders.
      std::vector<int> rest(inc.begin() + 1, inc.end());
      std::sort(rest.begin(), rest.end());
      do {
        vorder[v] = {inc[0]};
        vorder[v].insert(vorder[v].end(), rest.begin(), rest.end());
        pick_rotation(v + 1);
      } while (std::next_permutation(rest.begin(), rest.end()));
    };

    std::function<void(unsigned)> pick_order = [&](unsigned i) {
      if (i == two.size()) {
        pick_rotation(0);
        return;
      }
      pick_order(i + 1);
      std::swap(ec[two[i]][0], ec[two[i]][1]);
      pick_order(i + 1);
      std::swap(ec[two[i]][0], ec[two[i]][1]);
    };
    pick_order(0);
  };

  std::function<void(std::size_t)> pick_pairs = [&](std::size_t i) {
    if (i == su.pairs.size()) {
      finish(chosen);
      return;
    }
    pick_pairs(i + 1);
    auto [e, f] = su.pairs[i];
    if (load[e] < 2 && load[f] < 2) {
      ++load[e];
      ++load[f];
      chosen.push_back(static_cast<int>(i));
      pick_pairs(i + 1);
      chosen.pop_back();
      --load[e];
      --load[f];
    }
  };
  pick_pairs(0);
}

}  // namespace

std::set<std::string> labeled_drawings(const LabeledGraph& g) {
  std::set<std::string> out;
  enumerate(g, [&](const Drawing& d) { out.insert(labeled_key(d)); });
  return out;
}

std::set<std::string> canonical_drawings(const LabeledGraph& g) {
  std::set<std::string> out;
  enumerate(g, [&](const Drawing& d) { out.insert(canonical_key(d, g)); });
  return out;
}

}  // namespace oracle
