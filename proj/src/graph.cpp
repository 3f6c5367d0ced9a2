#include "kplane/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace kplane {

int LabeledGraph::add_vertex(std::string label) {
    labels.push_back(std::move(label));
    return n() - 1;
}

int LabeledGraph::add_edge(int u, int v, EdgeTag tag, int tag_a, int tag_b, bool uncrossable) {
    if (u == v || u < 0 || v < 0 || u >= n() || v >= n())
        throw std::invalid_argument("add_edge: bad endpoints");
    if (u > v) std::swap(u, v);
    if (has_edge(u, v)) throw std::invalid_argument("add_edge: duplicate edge");
    edges.push_back(EdgeInfo{u, v, tag, tag_a, tag_b, uncrossable});
    return m() - 1;
}

bool LabeledGraph::has_edge(int u, int v) const { return edge_index(u, v) >= 0; }

int LabeledGraph::edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    for (int i = 0; i < m(); ++i)
        if (edges[i].u == u && edges[i].v == v) return i;
    return -1;
}

int LabeledGraph::degree(int v) const {
    int d = 0;
    for (const auto& e : edges) d += (e.u == v) + (e.v == v);
    return d;
}

std::vector<std::vector<int>> LabeledGraph::adjacency() const {
    std::vector<std::vector<int>> adj(n());
    for (const auto& e : edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    for (auto& row : adj) std::sort(row.begin(), row.end());
    return adj;
}

std::vector<std::vector<int>> LabeledGraph::incident_edges() const {
    std::vector<std::vector<int>> inc(n());
    for (int i = 0; i < m(); ++i) {
        inc[edges[i].u].push_back(i);
        inc[edges[i].v].push_back(i);
    }
    return inc;
}

std::vector<std::vector<int>> LabeledGraph::components() const {
    std::vector<int> comp(n(), -1);
    auto adj = adjacency();
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n(); ++s) {
        if (comp[s] >= 0) continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        std::vector<int> stack{s};
        comp[s] = id;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            out[id].push_back(v);
            for (int w : adj[v])
                if (comp[w] < 0) {
                    comp[w] = id;
                    stack.push_back(w);
                }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

bool LabeledGraph::connected() const { return n() <= 1 || components().size() == 1; }

LabeledGraph LabeledGraph::induced(const std::vector<int>& verts) const {
    LabeledGraph g;
    std::vector<int> remap(n(), -1);
    for (int v : verts) remap[v] = g.add_vertex(labels[v]);
    for (const auto& e : edges)
        if (remap[e.u] >= 0 && remap[e.v] >= 0)
            g.add_edge(remap[e.u], remap[e.v], e.tag, e.tag_a, e.tag_b, e.uncrossable);
    return g;
}

LabeledGraph gen_path(int len) {
    if (len < 1) throw std::invalid_argument("gen_path: len >= 1 required");
    LabeledGraph g;
    for (int i = 0; i <= len; ++i) g.add_vertex("p_" + std::to_string(i));
    for (int i = 0; i < len; ++i) g.add_edge(i, i + 1);
    return g;
}

LabeledGraph gen_cycle(int len, bool uncrossable) {
    if (len < 3) throw std::invalid_argument("gen_cycle: len >= 3 required");
    LabeledGraph g;
    for (int i = 0; i < len; ++i) g.add_vertex("v_" + std::to_string(i));
    for (int i = 0; i < len; ++i)
        g.add_edge(i, (i + 1) % len, EdgeTag::CycleEdge, 1, 0, uncrossable);
    return g;
}

LabeledGraph gen_complete(int n) {
    if (n < 1) throw std::invalid_argument("gen_complete: n >= 1 required");
    LabeledGraph g;
    for (int i = 0; i < n; ++i) g.add_vertex("u_" + std::to_string(i));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

namespace {

const std::vector<std::pair<int, int>>& gadget_removed_edges() {
    static const std::vector<std::pair<int, int>> removed = {{2, 3}, {4, 5}, {6, 8}, {7, 8}};
    return removed;
}

}  // namespace

LabeledGraph gen_k9_minus(const std::vector<std::pair<int, int>>& removed) {
    if (removed.size() > 4) throw std::invalid_argument("gen_k9_minus: at most 4 removals");
    std::set<std::pair<int, int>> gone;
    for (auto [a, b] : removed) {
        if (a > b) std::swap(a, b);
        if (a < 0 || b > 8 || a == b) throw std::invalid_argument("gen_k9_minus: bad edge");
        if (!gone.insert({a, b}).second)
            throw std::invalid_argument("gen_k9_minus: duplicate removal");
    }
    LabeledGraph g;
    for (int i = 0; i < 9; ++i) g.add_vertex("x_" + std::to_string(i));
    for (int i = 0; i < 9; ++i)
        for (int j = i + 1; j < 9; ++j)
            if (!gone.count({i, j})) g.add_edge(i, j);
    return g;
}

LabeledGraph gen_gadget_x() { return gen_k9_minus(gadget_removed_edges()); }

LabeledGraph gen_x_plus() {
    LabeledGraph g = gen_gadget_x();
    int xp = g.add_vertex("x'");
    g.add_edge(3, xp);
    g.add_edge(4, xp);
    g.add_edge(6, xp);
    return g;
}

int braid_partner(int j) { return (j % 2 == 0) ? (j + 8) % 10 : (j + 2) % 10; }

LabeledGraph gen_gk_minus(int k, bool last_uncrossable) {
    if (k < 1) throw std::invalid_argument("gen_gk_minus: k >= 1 required");
    LabeledGraph g;
    for (int i = 1; i <= k; ++i)
        for (int j = 0; j < 10; ++j)
            g.add_vertex("v_" + std::to_string(j) + "^" + std::to_string(i));
    auto vid = [](int ring, int j) { return (ring - 1) * 10 + ((j % 10) + 10) % 10; };
    for (int i = 1; i <= k; ++i) {
        bool unc = (i == 1) || (last_uncrossable && i == k);
        for (int j = 0; j < 10; ++j)
            g.add_edge(vid(i, j), vid(i, j + 1), EdgeTag::CycleEdge, i, 0, unc);
    }
    for (int i = 1; i < k; ++i)
        for (int j = 0; j < 10; ++j)
            g.add_edge(vid(i, j), vid(i + 1, braid_partner(j)), EdgeTag::Matching, i, i + 1);
    return g;
}

LabeledGraph gen_gk(int k) {
    if (k < 2) throw std::invalid_argument("gen_gk: k >= 2 required");
    LabeledGraph g = gen_gk_minus(k, false);
    for (auto& e : g.edges) e.uncrossable = false;
    auto vid = [](int ring, int j) { return (ring - 1) * 10 + ((j % 10) + 10) % 10; };

    // One gadget copy per edge of ring 1 and ring k, sharing that edge as x6x7.
    // The lower-id endpoint plays x6. Fresh vertices cover x0..x5 and x8.
    int copy = 0;
    auto attach_gadget = [&](int ring) {
        for (int j = 0; j < 10; ++j, ++copy) {
            int a = vid(ring, j), b = vid(ring, j + 1);
            int x6 = std::min(a, b), x7 = std::max(a, b);
            LabeledGraph x = gen_gadget_x();
            std::vector<int> map(9, -1);
            map[6] = x6;
            map[7] = x7;
            for (int t : {0, 1, 2, 3, 4, 5, 8})
                map[t] = g.add_vertex("x_" + std::to_string(t) + "^" + std::to_string(copy));
            for (const auto& e : x.edges) {
                if ((e.u == 6 && e.v == 7) || (e.u == 7 && e.v == 6)) continue;
                g.add_edge(map[e.u], map[e.v], EdgeTag::Gadget, copy);
            }
        }
    };
    attach_gadget(1);
    attach_gadget(k);

    auto add_chords = [&](int ring) {
        for (int j = 0; j < 10; ++j)
            g.add_edge(vid(ring, j), vid(ring, (j + 2) % 10), EdgeTag::LengthTwo, ring);
    };
    add_chords(1);
    add_chords(k);
    return g;
}

std::string write_edge_list(const LabeledGraph& g) {
    std::ostringstream out;
    out << "n " << g.n() << "\n";
    for (const auto& e : g.edges) {
        out << e.u << " " << e.v;
        if (e.uncrossable) out << " !";
        out << "\n";
    }
    return out.str();
}

LabeledGraph read_edge_list(std::istream& in) {
    LabeledGraph g;
    std::string line;
    bool have_header = false;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;  // blank line
        if (!have_header) {
            if (first != "n")
                throw std::runtime_error("edge list: missing 'n <count>' header");
            int count = -1;
            if (!(ls >> count) || count < 0)
                throw std::runtime_error("edge list: bad vertex count");
            for (int i = 0; i < count; ++i) g.add_vertex(std::to_string(i));
            have_header = true;
            continue;
        }
        int u = -1, v = -1;
        std::istringstream es(line);
        if (!(es >> u >> v))
            throw std::runtime_error("edge list line " + std::to_string(lineno) + ": expected 'u v'");
        std::string bang;
        bool unc = false;
        if (es >> bang) {
            if (bang != "!")
                throw std::runtime_error("edge list line " + std::to_string(lineno) + ": trailing junk");
            unc = true;
        }
        if (u < 0 || v < 0 || u >= g.n() || v >= g.n() || u == v)
            throw std::runtime_error("edge list line " + std::to_string(lineno) + ": endpoint out of range");
        g.add_edge(u, v, EdgeTag::Plain, 0, 0, unc);
    }
    if (!have_header) throw std::runtime_error("edge list: empty input");
    return g;
}

LabeledGraph read_edge_list(const std::string& text) {
    std::istringstream in(text);
    return read_edge_list(in);
}

LabeledGraph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_edge_list(in);
}

namespace {

std::vector<uint64_t> adjacency_bits(const LabeledGraph& g) {
    std::vector<uint64_t> bits(g.n(), 0);
    for (const auto& e : g.edges) {
        bits[e.u] |= uint64_t(1) << e.v;
        bits[e.v] |= uint64_t(1) << e.u;
    }
    return bits;
}

}  // namespace

std::vector<std::vector<int>> automorphisms(const LabeledGraph& g) {
    int n = g.n();
    if (n > 10) throw std::invalid_argument("automorphisms: n <= 10 only");
    auto bits = adjacency_bits(g);
    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);

    std::vector<std::vector<int>> out;
    std::vector<int> perm(n, -1);
    std::vector<bool> used(n, false);
    // Backtracking with degree pruning keeps this fast enough for n <= 10.
    auto rec = [&](auto&& self, int v) -> void {
        if (v == n) {
            out.push_back(perm);
            return;
        }
        for (int w = 0; w < n; ++w) {
            if (used[w] || deg[w] != deg[v]) continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                if (((bits[v] >> u) & 1) != ((bits[w] >> perm[u]) & 1)) ok = false;
            if (!ok) continue;
            perm[v] = w;
            used[w] = true;
            self(self, v + 1);
            used[w] = false;
            perm[v] = -1;
        }
    };
    rec(rec, 0);
    return out;
}

std::string iso_canonical_key(const LabeledGraph& g) {
    int n = g.n();
    if (n > 8) throw std::invalid_argument("iso_canonical_key: n <= 8 only");
    auto bits = adjacency_bits(g);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::string best;
    do {
        std::string key(static_cast<size_t>(n) * n, '0');
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if ((bits[perm[u]] >> perm[v]) & 1) key[u * n + v] = '1';
        if (best.empty() || key < best) best = key;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::to_string(n) + ":" + best;
}

std::vector<LabeledGraph> all_graphs_on(int n) {
    if (n > 6) throw std::invalid_argument("all_graphs_on: n <= 6 only");
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
    std::set<std::string> seen;
    std::vector<LabeledGraph> out;
    for (uint32_t mask = 0; mask < (uint32_t(1) << slots.size()); ++mask) {
        LabeledGraph g;
        for (int i = 0; i < n; ++i) g.add_vertex("u_" + std::to_string(i));
        for (size_t s = 0; s < slots.size(); ++s)
            if ((mask >> s) & 1) g.add_edge(slots[s].first, slots[s].second);
        if (seen.insert(iso_canonical_key(g)).second) out.push_back(g);
    }
    return out;
}

std::vector<LabeledGraph> connected_graphs_up_to_edges(int max_edges) {
    if (max_edges > 7) throw std::invalid_argument("connected_graphs_up_to_edges: <= 7 only");
    std::set<std::string> seen;
    std::vector<LabeledGraph> out;
    // A connected graph with m edges has at most m+1 vertices.
    for (int n = 2; n <= max_edges + 1 && n <= 7; ++n) {
        std::vector<std::pair<int, int>> slots;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
        for (uint32_t mask = 0; mask < (uint32_t(1) << slots.size()); ++mask) {
            if (__builtin_popcount(mask) > max_edges) continue;
            LabeledGraph g;
            for (int i = 0; i < n; ++i) g.add_vertex("u_" + std::to_string(i));
            for (size_t s = 0; s < slots.size(); ++s)
                if ((mask >> s) & 1) g.add_edge(slots[s].first, slots[s].second);
            bool ok = g.connected();
            for (int v = 0; v < n && ok; ++v)
                if (g.degree(v) == 0) ok = false;
            if (!ok) continue;
            // iso_canonical_key is n<=8 so this is fine (n <= 7 here).
            if (seen.insert(iso_canonical_key(g)).second) out.push_back(g);
        }
    }
    return out;
}

}  // namespace kplane
