#include "kplane/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"

#include "kplane/canonical.hpp"
#include "kplane/flow.hpp"
#include "kplane/json_io.hpp"
#include "kplane/search.hpp"

namespace kplane {

namespace {

constexpr int ring_len = 10;

static_assert(static_cast<int>(FaceClass::Active) == 0,
              "dart tags store the class value and the search allows tag 0");

std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

std::vector<int> frontier_nodes_of(const Drawing& d) {
  std::vector<int> nodes(ring_len, -1);
  for (int j = 0; j < ring_len; ++j) {
    if (static_cast<std::size_t>(j) >= d.vertex_node.size() || d.vertex_node[j] < 0)
      throw std::logic_error("frontier_nodes_of: ring vertex unplaced");
    nodes[j] = d.vertex_node[j];
  }
  return nodes;
}

bool frontier_ring_uncrossed(const Drawing& d) {
  int cnt = 0;
  for (const DrawingEdge& rec : d.edges) {
    if (!rec.drawn || rec.artifact) continue;
    int a = rec.gu, b = rec.gv;
    if (a < 0 || b < 0 || a >= ring_len || b >= ring_len) continue;
    bool consecutive = (a + 1) % ring_len == b || (b + 1) % ring_len == a;
    if (consecutive && rec.crossings == 0 && rec.chain.size() == 1) ++cnt;
  }
  return cnt == ring_len;
}

std::vector<char> potential_final_faces(const Drawing& d, const FaceSet& faces,
                                        const std::vector<int>& frontier_nodes) {
  int nf = faces.count();
  FlowNetwork net;
  int s = net.add_node();
  std::vector<int> face_node(nf);
  for (int f = 0; f < nf; ++f) face_node[f] = net.add_node();
  for (int vn : frontier_nodes) {
    int v = net.add_node();
    net.add_arc(s, v, 1);
    std::vector<int> fs;
    for (int x : d.rotation(vn)) fs.push_back(faces.face_of[x]);
    for (int f : sorted_unique(std::move(fs))) net.add_arc(v, face_node[f], 1);
  }
  for (const DrawingEdge& rec : d.edges) {
    if (!rec.drawn || rec.budget < 1) continue;
    for (int x : rec.chain) {
      int a = face_node[faces.face_of[x]];
      int b = face_node[faces.face_of[d.d_twin[x]]];
      net.add_arc(a, b, rec.budget);
      net.add_arc(b, a, rec.budget);
    }
  }
  std::vector<char> pf(nf, 0);
  for (int t = 0; t < nf; ++t) {
    FlowNetwork copy = net;
    pf[t] = copy.max_flow(s, face_node[t], ring_len) == ring_len ? 1 : 0;
  }
  return pf;
}

FaceClassMap classify_faces(const Drawing& d, const std::vector<int>& frontier_nodes) {
  FaceClassMap m;
  m.faces = compute_faces(d);
  int nf = m.faces.count();
  m.potential_final = potential_final_faces(d, m.faces, frontier_nodes);
  m.cls.assign(nf, FaceClass::Irrelevant);
  m.dead = true;
  for (char c : m.potential_final)
    if (c) m.dead = false;
  if (m.dead) return m;

  // Active: three units of face-to-face flow into some potential final face.
  FlowNetwork net;
  std::vector<int> face_node(nf);
  for (int f = 0; f < nf; ++f) face_node[f] = net.add_node();
  for (const DrawingEdge& rec : d.edges) {
    if (!rec.drawn || rec.budget < 1) continue;
    for (int x : rec.chain) {
      int a = face_node[m.faces.face_of[x]];
      int b = face_node[m.faces.face_of[d.d_twin[x]]];
      net.add_arc(a, b, rec.budget);
      net.add_arc(b, a, rec.budget);
    }
  }
  std::vector<int> pf_list;
  for (int f = 0; f < nf; ++f)
    if (m.potential_final[f]) pf_list.push_back(f);
  for (int g = 0; g < nf; ++g) {
    for (int t : pf_list) {
      if (g == t) {
        m.cls[g] = FaceClass::Active;
        break;
      }
      FlowNetwork copy = net;
      if (copy.max_flow(face_node[g], face_node[t], 3) >= 3) {
        m.cls[g] = FaceClass::Active;
        break;
      }
    }
  }

  // One dual arc per surviving segment of each crossable record.
  struct SegArc {
    int rec;
    int to;
  };
  std::vector<std::vector<SegArc>> arcs(nf);
  for (int x = 0; x < d.dart_count(); ++x) {
    int e = d.d_edge[x];
    if (d.edges[e].budget < 1) continue;
    arcs[m.faces.face_of[x]].push_back({e, m.faces.face_of[d.d_twin[x]]});
  }

  std::vector<std::vector<int>> corner_verts(nf);
  for (int vn : frontier_nodes) {
    std::vector<int> fs;
    for (int x : d.rotation(vn)) fs.push_back(m.faces.face_of[x]);
    for (int f : sorted_unique(std::move(fs))) corner_verts[f].push_back(vn);
  }

  auto incident = [&](int rec_id, int vn) {
    const DrawingEdge& r = d.edges[rec_id];
    int label = d.nodes[vn].vertex;
    if (label >= 0 && (r.gu == label || r.gv == label)) return true;
    return r.from_node == vn || r.to_node == vn;
  };

  // Passive: a frontier vertex sits on the face and an edge not incident to
  // that vertex starts a dual path of length one or two into an active face;
  // a length-two path may not cross the same record twice.
  for (int f = 0; f < nf; ++f) {
    if (m.cls[f] == FaceClass::Active) continue;
    bool passive = false;
    for (int vn : corner_verts[f]) {
      for (const SegArc& a1 : arcs[f]) {
        if (incident(a1.rec, vn)) continue;
        if (m.cls[a1.to] == FaceClass::Active) {
          passive = true;
          break;
        }
        for (const SegArc& a2 : arcs[a1.to]) {
          if (a2.rec == a1.rec) continue;
          if (m.cls[a2.to] == FaceClass::Active) {
            passive = true;
            break;
          }
        }
        if (passive) break;
      }
      if (passive) break;
    }
    if (passive) m.cls[f] = FaceClass::Passive;
  }

  // Transit: one arc into an active face plus a second arc into an active or
  // passive face.  Parallel arcs count separately; track how often that is
  // the deciding factor.
  for (int f = 0; f < nf; ++f) {
    if (m.cls[f] != FaceClass::Irrelevant) continue;
    int a_cnt = 0, ap_cnt = 0;
    std::set<int> a_rec, ap_rec;
    for (const SegArc& a : arcs[f]) {
      bool to_active = m.cls[a.to] == FaceClass::Active;
      bool to_ap = to_active || m.cls[a.to] == FaceClass::Passive;
      if (to_active) {
        ++a_cnt;
        a_rec.insert(a.rec);
      }
      if (to_ap) {
        ++ap_cnt;
        ap_rec.insert(a.rec);
      }
    }
    if (a_cnt >= 1 && ap_cnt >= 2) {
      m.cls[f] = FaceClass::Transit;
      if (a_rec.empty() || ap_rec.size() < 2) ++m.parallel_arc_transits;
    }
  }
  return m;
}

Drawing base_drawing() {
  Drawing d;
  d.k = 2;
  d.vertex_node.assign(ring_len, -1);
  for (int j = 0; j < ring_len; ++j) d.vertex_node[j] = d.new_node(NodeKind::Vertex, j);
  std::vector<int> fwd(ring_len), bwd(ring_len);
  for (int j = 0; j < ring_len; ++j) {
    int nj = (j + 1) % ring_len;
    int eid = d.new_edge(j, nj, 2);
    DrawingEdge& rec = d.edges[eid];
    rec.drawn = true;
    rec.from_node = j;
    rec.to_node = nj;
    fwd[j] = d.new_dart(j, eid, 0);
    bwd[j] = d.new_dart(nj, eid, 0);
    d.set_twins(fwd[j], bwd[j]);
    rec.chain = {fwd[j]};
  }
  for (int j = 0; j < ring_len; ++j) {
    d.attach_first(fwd[j]);
    d.insert_before(bwd[(j + ring_len - 1) % ring_len], fwd[j]);
  }
  return d;
}

void renumber_vertices(Drawing& d, const std::vector<int>& ring_nodes) {
  if (static_cast<int>(ring_nodes.size()) != ring_len)
    throw std::invalid_argument("renumber_vertices: need the ten ring nodes");
  std::vector<int> map(d.vertex_node.size(), -1);
  std::vector<char> on_ring(d.node_count(), 0);
  for (int j = 0; j < ring_len; ++j) {
    int vn = ring_nodes[j];
    if (vn < 0 || vn >= d.node_count() || d.nodes[vn].kind != NodeKind::Vertex ||
        d.nodes[vn].vertex < 0)
      throw std::logic_error("renumber_vertices: ring node is not a labeled vertex");
    map[d.nodes[vn].vertex] = j;
    on_ring[vn] = 1;
  }
  std::vector<int> rest;
  for (int v = 0; v < d.node_count(); ++v) {
    if (on_ring[v] || d.nodes[v].kind != NodeKind::Vertex) continue;
    if (d.nodes[v].vertex < 0)
      throw std::logic_error("renumber_vertices: unlabeled vertex node");
    rest.push_back(d.nodes[v].vertex);
  }
  std::sort(rest.begin(), rest.end());
  int next_label = ring_len;
  for (int old : rest) map[old] = next_label++;
  d.vertex_node.assign(next_label, -1);
  for (int v = 0; v < d.node_count(); ++v) {
    DrawingNode& n = d.nodes[v];
    if (n.kind != NodeKind::Vertex) continue;
    n.vertex = map[n.vertex];
    d.vertex_node[n.vertex] = v;
  }
  for (DrawingEdge& e : d.edges) {
    if (e.gu >= 0) {
      e.gu = map[e.gu];
      if (e.gu < 0) throw std::logic_error("renumber_vertices: edge endpoint vanished");
    }
    if (e.gv >= 0) {
      e.gv = map[e.gv];
      if (e.gv < 0) throw std::logic_error("renumber_vertices: edge endpoint vanished");
    }
  }
}

std::optional<Drawing> reduce_child(const Drawing& raw, int first_new_vertex) {
  std::vector<int> ring_nodes(ring_len);
  for (int j = 0; j < ring_len; ++j) {
    std::size_t label = static_cast<std::size_t>(first_new_vertex) + j;
    if (label >= raw.vertex_node.size() || raw.vertex_node[label] < 0)
      throw std::logic_error("reduce_child: new ring vertex unplaced");
    ring_nodes[j] = raw.vertex_node[label];
  }
  FaceClassMap fcm = classify_faces(raw, ring_nodes);
  if (fcm.dead) return std::nullopt;
  // A ring vertex whose every face is irrelevant can never receive its
  // matching edge later on: extension edges stay out of irrelevant faces and
  // a new edge cannot cross the vertex's own edges.  Such children are dead
  // ends just like drawings without a potential final face.
  for (int vn : ring_nodes) {
    bool held = false;
    for (int x : raw.rotation(vn))
      if (fcm.cls[fcm.faces.face_of[x]] != FaceClass::Irrelevant) {
        held = true;
        break;
      }
    if (!held) return std::nullopt;
  }
  std::vector<char> relevant(fcm.cls.size());
  for (std::size_t f = 0; f < fcm.cls.size(); ++f)
    relevant[f] = fcm.cls[f] != FaceClass::Irrelevant ? 1 : 0;
  std::vector<char> is_frontier(raw.node_count(), 0);
  for (int vn : ring_nodes) is_frontier[vn] = 1;
  Drawing cleaned = remove_region(raw, relevant, is_frontier);
  std::vector<int> cleaned_ring(ring_len);
  for (int j = 0; j < ring_len; ++j)
    cleaned_ring[j] = cleaned.vertex_node[first_new_vertex + j];
  renumber_vertices(cleaned, cleaned_ring);
  return cleaned;
}

Drawing cleanup_drawing(const Drawing& d) {
  std::vector<int> frontier = frontier_nodes_of(d);
  FaceClassMap fcm = classify_faces(d, frontier);
  if (fcm.dead) throw std::logic_error("cleanup_drawing: no potential final face");
  std::vector<char> relevant(fcm.cls.size());
  for (std::size_t f = 0; f < fcm.cls.size(); ++f)
    relevant[f] = fcm.cls[f] != FaceClass::Irrelevant ? 1 : 0;
  std::vector<char> is_frontier(d.node_count(), 0);
  for (int vn : frontier) is_frontier[vn] = 1;
  Drawing cleaned = remove_region(d, relevant, is_frontier);
  renumber_vertices(cleaned, frontier_nodes_of(cleaned));
  return cleaned;
}

namespace {

struct ExtSetup {
  Drawing working;
  std::vector<int> order;
  std::vector<char> allowed;  // empty means unrestricted
  int first_new = -1;
  int parallel_arc_transits = 0;
  bool dead = false;
};

ExtSetup setup_extension(const Drawing& d, bool uncrossable, bool restricted) {
  ExtSetup s;
  s.working = d;
  std::vector<int> frontier = frontier_nodes_of(s.working);
  if (restricted) {
    FaceClassMap fcm = classify_faces(s.working, frontier);
    s.parallel_arc_transits = fcm.parallel_arc_transits;
    if (fcm.dead) {
      s.dead = true;
      return s;
    }
    for (int x = 0; x < s.working.dart_count(); ++x)
      s.working.d_tag[x] = static_cast<int>(fcm.cls[fcm.faces.face_of[x]]);
    s.allowed = {1};  // new vertices only in active faces
  }
  int base_v = static_cast<int>(s.working.vertex_node.size());
  s.first_new = base_v;
  s.working.ensure_vertex_slot(base_v + ring_len - 1);
  std::vector<int> braid(ring_len), ring(ring_len);
  for (int j = 0; j < ring_len; ++j) {
    int off = (j % 2 == 0) ? 8 : 2;
    braid[j] = s.working.new_edge(j, base_v + (j + off) % ring_len, 0);
  }
  for (int j = 0; j < ring_len; ++j)
    ring[j] = s.working.new_edge(base_v + j, base_v + (j + 1) % ring_len, uncrossable ? 2 : 0);
  // Braids first (each places one new vertex), ring edges as soon as both of
  // their endpoints exist; pulling them forward prunes early.
  s.order = {braid[0], braid[1], braid[2], braid[3], braid[4], ring[2], braid[5],
             braid[6],  ring[3], ring[4],  braid[7], ring[8],  braid[8], ring[5],
             ring[6],   ring[7], braid[9], ring[0],  ring[1],  ring[9]};
  return s;
}

}  // namespace

ExtensionResult extend_with_cycle(const Drawing& d, bool uncrossable, int threads,
                                  const std::function<void(const Drawing&)>& observer) {
  ExtensionResult res;
  ExtSetup s = setup_extension(d, uncrossable, true);
  res.stats.parallel_arc_transits = s.parallel_arc_transits;
  if (s.dead) return res;
  if (observer) threads = 1;

  struct Part {
    std::map<std::string, Drawing> classes;
    long long completed = 0;
    long long dead = 0;
    std::uint64_t expansions = 0;
  };

  auto handle = [&](Drawing& raw, Part& part) {
    ++part.completed;
    if (observer) observer(raw);
    std::optional<Drawing> child = reduce_child(raw, s.first_new);
    if (!child) {
      ++part.dead;
      return;
    }
    std::string key = cycle_canonical_key(*child, frontier_nodes_of(*child), CycleMaps::Braided);
    part.classes.emplace(std::move(key), std::move(*child));
  };

  const std::vector<char>* allow = s.allowed.empty() ? nullptr : &s.allowed;
  std::vector<Part> parts;

  if (threads <= 1) {
    parts.resize(1);
    SearchProblem sp;
    sp.base = &s.working;
    sp.order = s.order;
    sp.tag_allowed = allow;
    sp.on_complete = [&](Drawing& raw) {
      handle(raw, parts[0]);
      return true;
    };
    SearchOutcome so = run_search(sp);
    parts[0].expansions = so.expansions;
  } else {
    FaceSet faces = compute_faces(s.working);
    auto level1 = insertion_plans(s.working, faces, s.order[0], allow);
    std::vector<int> deeper(s.order.begin() + 1, s.order.end());
    parts.resize(level1.size());
    int nt = std::min<std::size_t>(threads, std::max<std::size_t>(level1.size(), 1));
    std::vector<std::exception_ptr> errors(nt);
    std::vector<std::thread> pool;
    for (int t = 0; t < nt; ++t) {
      pool.emplace_back([&, t]() {
        try {
          Drawing local = s.working;
          for (std::size_t i = t; i < level1.size(); i += nt) {
            AppliedPlan ap = apply_plan(local, level1[i]);
            SearchProblem sp;
            sp.base = &local;
            sp.order = deeper;
            sp.tag_allowed = allow;
            sp.on_complete = [&](Drawing& raw) {
              handle(raw, parts[i]);
              return true;
            };
            SearchOutcome so = run_search(sp);
            parts[i].expansions = so.expansions + 1;
            undo_plan(local, ap);
          }
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& err : errors)
      if (err) std::rethrow_exception(err);
  }

  std::map<std::string, Drawing> all;
  for (Part& p : parts) {
    res.stats.completed += p.completed;
    res.stats.dead += p.dead;
    res.stats.expansions += static_cast<long long>(p.expansions);
    for (auto& kv : p.classes) all.emplace(kv.first, std::move(kv.second));
  }
  for (auto& kv : all) {
    res.keys.push_back(kv.first);
    res.children.push_back(std::move(kv.second));
  }
  return res;
}

bool final_cycle_fits(const Drawing& d, bool restricted, int threads) {
  ExtSetup s = setup_extension(d, true, restricted);
  if (s.dead) return false;
  const std::vector<char>* allow = s.allowed.empty() ? nullptr : &s.allowed;

  if (threads <= 1) {
    bool found = false;
    SearchProblem sp;
    sp.base = &s.working;
    sp.order = s.order;
    sp.tag_allowed = allow;
    sp.on_complete = [&](Drawing&) {
      found = true;
      return false;
    };
    run_search(sp);
    return found;
  }

  FaceSet faces = compute_faces(s.working);
  auto level1 = insertion_plans(s.working, faces, s.order[0], allow);
  std::vector<int> deeper(s.order.begin() + 1, s.order.end());
  std::atomic<bool> found{false};
  int nt = std::min<std::size_t>(threads, std::max<std::size_t>(level1.size(), 1));
  std::vector<std::exception_ptr> errors(nt);
  std::vector<std::thread> pool;
  for (int t = 0; t < nt; ++t) {
    pool.emplace_back([&, t]() {
      try {
        Drawing local = s.working;
        for (std::size_t i = t; i < level1.size() && !found.load(); i += nt) {
          AppliedPlan ap = apply_plan(local, level1[i]);
          SearchProblem sp;
          sp.base = &local;
          sp.order = deeper;
          sp.tag_allowed = allow;
          sp.on_complete = [&](Drawing&) {
            found.store(true);
            return false;
          };
          run_search(sp);
          undo_plan(local, ap);
        }
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& err : errors)
    if (err) std::rethrow_exception(err);
  return found.load();
}

namespace {

struct ClassInfo {
  Drawing drawing;
  int iter = 0;
  bool final_hit = false;
  bool expanded = false;
};

using ClassMap = std::map<std::string, ClassInfo>;

void save_state(const std::string& dir, const ClassMap& visited,
                const PipelineReport& rep, const std::vector<std::string>& next_level,
                int next_iter) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  nlohmann::ordered_json idx;
  nlohmann::ordered_json iters = nlohmann::ordered_json::array();
  for (const IterationStats& it : rep.iterations)
    iters.push_back({{"expansions", it.expansions},
                     {"completed", it.completed},
                     {"dead", it.dead},
                     {"new_classes", it.new_classes},
                     {"final_hits", it.final_hits}});
  idx["iterations"] = iters;
  nlohmann::ordered_json classes = nlohmann::ordered_json::array();
  for (const auto& kv : visited) {
    std::string file = key_hash(kv.first) + ".json";
    classes.push_back({{"key", kv.first},
                       {"file", file},
                       {"iter", kv.second.iter},
                       {"final_hit", kv.second.final_hit},
                       {"expanded", kv.second.expanded}});
    fs::path p = fs::path(dir) / file;
    if (!fs::exists(p)) {
      std::ofstream out(p);
      out << drawing_to_json(kv.second.drawing);
    }
  }
  idx["classes"] = classes;
  idx["next_iter"] = next_iter;
  idx["next_level"] = next_level;
  idx["parallel_arc_transits"] = rep.parallel_arc_transits;
  idx["closed"] = rep.closed;
  std::ofstream out(fs::path(dir) / "index.json");
  out << idx.dump(1);
}

bool load_state(const std::string& dir, ClassMap& visited, PipelineReport& rep,
                std::vector<std::string>& next_level, int& next_iter) {
  namespace fs = std::filesystem;
  fs::path ip = fs::path(dir) / "index.json";
  if (!fs::exists(ip)) return false;
  std::ifstream in(ip);
  nlohmann::ordered_json idx = nlohmann::ordered_json::parse(in);
  for (const auto& it : idx.at("iterations")) {
    IterationStats st;
    st.expansions = it.at("expansions").get<long long>();
    st.completed = it.at("completed").get<long long>();
    st.dead = it.at("dead").get<long long>();
    st.new_classes = it.at("new_classes").get<int>();
    st.final_hits = it.at("final_hits").get<int>();
    rep.iterations.push_back(st);
    rep.final_hits += st.final_hits;
  }
  for (const auto& c : idx.at("classes")) {
    ClassInfo info;
    info.iter = c.at("iter").get<int>();
    info.final_hit = c.at("final_hit").get<bool>();
    info.expanded = c.at("expanded").get<bool>();
    std::ifstream df(fs::path(dir) / c.at("file").get<std::string>());
    if (!df) throw std::runtime_error("run_pipeline: missing drawing file in state dir");
    std::stringstream ss;
    ss << df.rdbuf();
    info.drawing = drawing_from_json(ss.str());
    visited.emplace(c.at("key").get<std::string>(), std::move(info));
  }
  idx.at("next_level").get_to(next_level);
  next_iter = idx.at("next_iter").get<int>();
  rep.parallel_arc_transits = idx.at("parallel_arc_transits").get<int>();
  rep.closed = idx.at("closed").get<bool>();
  return true;
}

}  // namespace

PipelineReport run_pipeline(const PipelineOptions& opt) {
  PipelineReport rep;
  ClassMap visited;
  std::vector<std::string> current;
  int start_iter = 0;

  bool resumed = false;
  if (!opt.state_dir.empty())
    resumed = load_state(opt.state_dir, visited, rep, current, start_iter);
  if (!resumed) {
    Drawing base = base_drawing();
    std::string key = cycle_canonical_key(base, frontier_nodes_of(base), CycleMaps::Braided);
    ClassInfo info;
    info.drawing = std::move(base);
    info.iter = 0;
    current = {key};
    visited.emplace(std::move(key), std::move(info));
    IterationStats level0;
    level0.new_classes = 1;
    rep.iterations.push_back(level0);
    if (!opt.state_dir.empty()) save_state(opt.state_dir, visited, rep, current, 0);
  }

  for (int it = start_iter; opt.closure || it < opt.max_iter; ++it) {
    if (current.empty()) {
      rep.closed = true;
      break;
    }

    struct Slot {
      ExtensionResult ext;
      bool probed = false;
      bool hit = false;
    };
    std::vector<Slot> slots(current.size());
    int inner = current.size() == 1 ? opt.threads : 1;
    auto work = [&](std::size_t i) {
      const ClassInfo& info = visited.at(current[i]);
      slots[i].ext = extend_with_cycle(info.drawing, false, inner);
      if (!slots[i].ext.keys.empty()) {
        slots[i].probed = true;
        slots[i].hit = final_cycle_fits(info.drawing, true, inner);
      }
    };
    int nt = std::min<std::size_t>(opt.threads, current.size());
    if (nt <= 1) {
      for (std::size_t i = 0; i < current.size(); ++i) work(i);
    } else {
      std::vector<std::exception_ptr> errors(nt);
      std::vector<std::thread> pool;
      for (int t = 0; t < nt; ++t) {
        pool.emplace_back([&, t]() {
          try {
            for (std::size_t i = t; i < current.size(); i += nt) work(i);
          } catch (...) {
            errors[t] = std::current_exception();
          }
        });
      }
      for (auto& th : pool) th.join();
      for (auto& err : errors)
        if (err) std::rethrow_exception(err);
    }

    IterationStats& lvl = rep.iterations[it];
    IterationStats next;
    std::vector<std::string> next_keys;
    for (std::size_t i = 0; i < current.size(); ++i) {
      Slot& slot = slots[i];
      ClassInfo& info = visited.at(current[i]);
      info.expanded = true;
      lvl.expansions += slot.ext.stats.expansions;
      lvl.completed += slot.ext.stats.completed;
      lvl.dead += slot.ext.stats.dead;
      rep.parallel_arc_transits += slot.ext.stats.parallel_arc_transits;
      if (slot.probed && slot.hit) {
        info.final_hit = true;
        ++lvl.final_hits;
        ++rep.final_hits;
      }
      for (std::size_t c = 0; c < slot.ext.keys.size(); ++c) {
        const std::string& key = slot.ext.keys[c];
        if (visited.count(key)) continue;
        ClassInfo child;
        child.drawing = std::move(slot.ext.children[c]);
        child.iter = it + 1;
        visited.emplace(key, std::move(child));
        ++next.new_classes;
        next_keys.push_back(key);
      }
    }
    std::sort(next_keys.begin(), next_keys.end());
    rep.iterations.push_back(next);
    current = std::move(next_keys);
    if (!opt.state_dir.empty()) save_state(opt.state_dir, visited, rep, current, it + 1);
  }
  if (current.empty()) rep.closed = true;

  rep.drawings = static_cast<int>(visited.size());
  std::set<std::string> rot_only, mirrored, mirrored_hits, mirrored_uncrossed;
  for (const auto& kv : visited) {
    const Drawing& d = kv.second.drawing;
    std::vector<int> fr = frontier_nodes_of(d);
    rot_only.insert(cycle_canonical_key(d, fr, CycleMaps::EvenRotations));
    std::string folded = cycle_canonical_key(d, fr, CycleMaps::BraidedMirrored);
    if (kv.second.final_hit) mirrored_hits.insert(folded);
    if (frontier_ring_uncrossed(d)) {
      ++rep.uncrossed_frontier_classes;
      mirrored_uncrossed.insert(folded);
    }
    mirrored.insert(std::move(folded));
  }
  rep.rotation_only_classes = static_cast<int>(rot_only.size());
  rep.mirror_quotient_classes = static_cast<int>(mirrored.size());
  rep.mirror_quotient_final_hits = static_cast<int>(mirrored_hits.size());
  rep.mirror_quotient_uncrossed = static_cast<int>(mirrored_uncrossed.size());
  return rep;
}

}  // namespace kplane
