#include "kplane/json_io.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <stdexcept>

#include "json.hpp"

namespace kplane {

namespace {

using nlohmann::ordered_json;

// Position of crossing node v along edge e's chain (joint between chain
// darts i and i+1), or -1 when v is not an interior node of e.
int joint_index(const Drawing& d, int e, int v) {
  const auto& chain = d.edges[e].chain;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i)
    if (d.head(chain[i]) == v) return static_cast<int>(i);
  return -1;
}

}  // namespace

std::string drawing_to_json(const Drawing& d) {
  ordered_json j;
  j["k"] = d.k;

  std::vector<int> verts;
  for (std::size_t v = 0; v < d.vertex_node.size(); ++v)
    if (d.vertex_node[v] >= 0) verts.push_back(static_cast<int>(v));
  j["vertices"] = verts;

  ordered_json crossings = ordered_json::array();
  for (int v = 0; v < d.node_count(); ++v) {
    const DrawingNode& n = d.nodes[v];
    if (n.kind != NodeKind::Crossing) continue;
    int a = std::min(n.cross.edge_a, n.cross.edge_b);
    int b = std::max(n.cross.edge_a, n.cross.edge_b);
    crossings.push_back(ordered_json{
        {"a", a}, {"b", b}, {"ia", joint_index(d, a, v)}, {"ib", joint_index(d, b, v)}});
  }
  j["crossings"] = crossings;

  ordered_json rot = ordered_json::object();
  for (int v = 0; v < d.node_count(); ++v)
    if (d.nodes[v].any_dart >= 0) rot[std::to_string(v)] = d.rotation(v);
  j["rotations"] = rot;

  ordered_json bud = ordered_json::object();
  for (std::size_t e = 0; e < d.edges.size(); ++e)
    if (d.edges[e].drawn) bud[std::to_string(e)] = d.edges[e].budget;
  j["budgets"] = bud;

  ordered_json raw;
  raw["d_node"] = d.d_node;
  raw["d_next"] = d.d_next;
  raw["d_twin"] = d.d_twin;
  raw["d_edge"] = d.d_edge;
  ordered_json nodes = ordered_json::array();
  for (const DrawingNode& n : d.nodes)
    nodes.push_back(ordered_json{{"k", static_cast<int>(n.kind)},
                                 {"v", n.vertex},
                                 {"a", n.any_dart},
                                 {"d", n.degree},
                                 {"ca", n.cross.edge_a},
                                 {"cb", n.cross.edge_b}});
  raw["nodes"] = nodes;
  ordered_json edges = ordered_json::array();
  for (const DrawingEdge& e : d.edges)
    edges.push_back(ordered_json{{"gu", e.gu},
                                 {"gv", e.gv},
                                 {"fn", e.from_node},
                                 {"tn", e.to_node},
                                 {"fk", e.fake},
                                 {"bu", e.budget},
                                 {"cr", e.crossings},
                                 {"dr", e.drawn},
                                 {"ar", e.artifact},
                                 {"ch", e.chain}});
  raw["edges"] = edges;
  raw["vn"] = d.vertex_node;
  j["raw"] = raw;

  return j.dump(1);
}

Drawing drawing_from_json(const std::string& text) {
  try {
    ordered_json j = ordered_json::parse(text);
    const ordered_json& raw = j.at("raw");
    Drawing d;
    d.k = j.at("k").get<int>();
    raw.at("d_node").get_to(d.d_node);
    raw.at("d_next").get_to(d.d_next);
    raw.at("d_twin").get_to(d.d_twin);
    raw.at("d_edge").get_to(d.d_edge);
    std::size_t nd = d.d_node.size();
    if (d.d_next.size() != nd || d.d_twin.size() != nd || d.d_edge.size() != nd)
      throw std::runtime_error("dart arrays disagree");
    d.d_prev.assign(nd, -1);
    for (std::size_t x = 0; x < nd; ++x) {
      int nx = d.d_next[x];
      if (nx < 0 || static_cast<std::size_t>(nx) >= nd)
        throw std::runtime_error("dart successor out of range");
      d.d_prev[nx] = static_cast<int>(x);
    }
    d.d_tag.assign(nd, -1);
    for (const ordered_json& n : raw.at("nodes")) {
      DrawingNode node;
      node.kind = static_cast<NodeKind>(n.at("k").get<int>());
      node.vertex = n.at("v").get<int>();
      node.any_dart = n.at("a").get<int>();
      node.degree = n.at("d").get<int>();
      node.cross.edge_a = n.at("ca").get<int>();
      node.cross.edge_b = n.at("cb").get<int>();
      d.nodes.push_back(node);
    }
    for (const ordered_json& e : raw.at("edges")) {
      DrawingEdge rec;
      rec.gu = e.at("gu").get<int>();
      rec.gv = e.at("gv").get<int>();
      rec.from_node = e.at("fn").get<int>();
      rec.to_node = e.at("tn").get<int>();
      rec.fake = static_cast<std::int8_t>(e.at("fk").get<int>());
      rec.budget = static_cast<std::int8_t>(e.at("bu").get<int>());
      rec.crossings = static_cast<std::int8_t>(e.at("cr").get<int>());
      rec.drawn = e.at("dr").get<bool>();
      rec.artifact = e.at("ar").get<bool>();
      e.at("ch").get_to(rec.chain);
      d.edges.push_back(rec);
    }
    raw.at("vn").get_to(d.vertex_node);
    return d;
  } catch (const std::runtime_error&) {
    throw;
  } catch (const std::exception& e) {
    throw std::runtime_error(std::string("drawing_from_json: ") + e.what());
  }
}

std::string key_hash(const std::string& key) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : key) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string drawing_to_dot(const Drawing& d) {
  std::string out = "graph drawing {\n";
  for (int v = 0; v < d.node_count(); ++v) {
    const DrawingNode& n = d.nodes[v];
    if (n.any_dart < 0) continue;
    out += "  n" + std::to_string(v);
    switch (n.kind) {
      case NodeKind::Vertex:
        out += " [shape=circle,label=\"" + std::to_string(n.vertex) + "\"]";
        break;
      case NodeKind::Crossing:
        out += " [shape=point]";
        break;
      case NodeKind::Bend:
        out += " [shape=square,label=\"\"]";
        break;
      case NodeKind::Hub:
        out += " [shape=diamond,label=\"\"]";
        break;
    }
    out += ";\n";
  }
  for (std::size_t e = 0; e < d.edges.size(); ++e) {
    const DrawingEdge& rec = d.edges[e];
    if (!rec.drawn) continue;
    std::string style;
    if (rec.artifact)
      style = " [style=dashed]";
    else if (rec.fake == 2)
      style = " [style=bold]";
    for (int x : rec.chain) {
      out += "  n" + std::to_string(d.d_node[x]) + " -- n" + std::to_string(d.head(x)) +
             style + ";\n";
    }
  }
  out += "}\n";
  return out;
}

}  // namespace kplane
