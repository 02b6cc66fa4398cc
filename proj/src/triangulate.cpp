#include "planq/triangulate.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "planq/error.hpp"

namespace planq {

namespace {

void internal_check(bool cond, const char* msg) {
    if (!cond) throw std::logic_error(std::string("triangulate: ") + msg);
}

struct Dsu {
    std::vector<int> up;
    explicit Dsu(int n) : up(n) {
        for (int i = 0; i < n; ++i) up[i] = i;
    }
    int find(int x) {
        while (up[x] != x) x = up[x] = up[up[x]];
        return x;
    }
    void unite(int a, int b) { up[find(a)] = find(b); }
};

/* Mutable rotation system. Directed edge ids 2k and 2k+1 for undirected edge
 * k (original canonical ids first, added edges appended); twin(e) = e ^ 1.
 * Face-walk successor of e is nxt_cw[e ^ 1]. */
struct Surgeon {
    int n;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> esrc, edst;
    std::vector<int> nxt_cw, nxt_ccw, first_he;
    std::unordered_set<long long> edge_set;

    long long key(int u, int v) const {
        if (u > v) std::swap(u, v);
        return static_cast<long long>(u) * n + v;
    }
    bool has(int u, int v) const { return edge_set.count(key(u, v)) > 0; }
    int twin(int e) const { return e ^ 1; }
    int succ(int e) const { return nxt_cw[e ^ 1]; }

    explicit Surgeon(const Embedding& emb) : n(emb.graph.n) {
        edges = emb.graph.edge_list();
        int m = static_cast<int>(edges.size());
        esrc.resize(2 * m);
        edst.resize(2 * m);
        for (int k = 0; k < m; ++k) {
            esrc[2 * k] = edges[k].first;
            edst[2 * k] = edges[k].second;
            esrc[2 * k + 1] = edges[k].second;
            edst[2 * k + 1] = edges[k].first;
            edge_set.insert(key(edges[k].first, edges[k].second));
        }
        nxt_cw.assign(2 * m, -1);
        nxt_ccw.assign(2 * m, -1);
        first_he.assign(n, -1);
        for (int v = 0; v < n; ++v) {
            int prev = -1;
            for (int w : emb.rotation[v]) {
                int k = edge_index(edges, v, w);
                int e = 2 * k + (v < w ? 0 : 1);
                if (prev == -1) {
                    nxt_cw[e] = e;
                    nxt_ccw[e] = e;
                    first_he[v] = e;
                } else {
                    insert_after(prev, e);
                }
                prev = e;
            }
        }
    }

    void insert_after(int refE, int newE) {
        int nxt = nxt_cw[refE];
        nxt_cw[refE] = newE;
        nxt_ccw[newE] = refE;
        nxt_cw[newE] = nxt;
        nxt_ccw[nxt] = newE;
    }
    void insert_before(int refE, int newE) { insert_after(nxt_ccw[refE], newE); }

    // Allocates the pair of half-edges for a new undirected edge (u, v).
    int alloc(int u, int v) {
        int k = static_cast<int>(edges.size());
        edges.emplace_back(std::min(u, v), std::max(u, v));
        esrc.push_back(u);
        edst.push_back(v);
        esrc.push_back(v);
        edst.push_back(u);
        nxt_cw.insert(nxt_cw.end(), {-1, -1});
        nxt_ccw.insert(nxt_ccw.end(), {-1, -1});
        edge_set.insert(key(u, v));
        return 2 * k;  // directed u -> v; twin is 2k + 1
    }

    // Joins two components by (u, v) at arbitrary rotation positions (any
    // choice keeps genus zero when the endpoints are in different components).
    void add_bridge(int u, int v) {
        int e = alloc(u, v);
        attach_anywhere(u, e);
        attach_anywhere(v, twin(e));
    }
    void attach_anywhere(int v, int e) {
        if (first_he[v] == -1) {
            nxt_cw[e] = e;
            nxt_ccw[e] = e;
            first_he[v] = e;
        } else {
            insert_before(first_he[v], e);
        }
    }

    // Chord (a, c) across the face corner a -> b -> c: (c -> a) goes right
    // after (c -> b), and (a -> c) right before (a -> b). Returns the new
    // directed edge (a -> c); the face walk continues a -> c -> old successor
    // of b -> c.
    int add_corner_chord(int eAB, int eBC) {
        int a = esrc[eAB], c = edst[eBC];
        int e = alloc(a, c);
        insert_after(twin(eBC), twin(e));
        insert_before(eAB, e);
        return e;
    }

    std::vector<int> out_edges(int v) const {
        std::vector<int> res;
        int start = first_he[v];
        if (start == -1) return res;
        int e = start;
        do {
            res.push_back(e);
            e = nxt_cw[e];
        } while (e != start);
        return res;
    }

    // All faces as directed-edge walks, in scan order of directed edge ids.
    std::vector<std::vector<int>> face_walks() const {
        std::vector<char> seen(esrc.size(), 0);
        std::vector<std::vector<int>> walks;
        for (int e0 = 0; e0 < static_cast<int>(esrc.size()); ++e0) {
            if (seen[e0] || nxt_cw[e0] == -1) continue;
            walks.emplace_back();
            int e = e0;
            do {
                seen[e] = 1;
                walks.back().push_back(e);
                e = succ(e);
            } while (e != e0);
        }
        return walks;
    }

    Embedding to_embedding() const {
        Embedding emb;
        emb.graph = Graph(n);
        for (auto [u, v] : edges) emb.graph.add_edge(u, v);
        emb.rotation.assign(n, {});
        for (int v = 0; v < n; ++v)
            for (int e : out_edges(v)) emb.rotation[v].push_back(edst[e]);
        return emb;
    }
};

// Biconnected-component label per undirected edge (iterative Tarjan).
std::vector<int> bcc_edge_labels(const Surgeon& s, int& num_labels) {
    int n = s.n;
    int m = static_cast<int>(s.edges.size());
    std::vector<int> label(m, -1), disc(n, -1), low(n, 0);
    std::vector<int> estack;
    int timer = 0;
    num_labels = 0;

    struct Frame {
        int v;
        int pk;  // undirected edge to parent, -1 at roots
        std::vector<int> out;
        std::size_t idx = 0;
    };
    std::vector<Frame> stack;
    for (int root = 0; root < n; ++root) {
        if (disc[root] != -1) continue;
        stack.push_back({root, -1, s.out_edges(root), 0});
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            if (f.idx < f.out.size()) {
                int e = f.out[f.idx++];
                int k = e >> 1, w = s.edst[e];
                if (k == f.pk) continue;
                if (disc[w] == -1) {
                    estack.push_back(k);
                    disc[w] = low[w] = timer++;
                    stack.push_back({w, k, s.out_edges(w), 0});
                } else if (disc[w] < disc[f.v]) {
                    estack.push_back(k);
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
            } else {
                Frame done = stack.back();
                stack.pop_back();
                if (stack.empty()) continue;
                Frame& p = stack.back();
                low[p.v] = std::min(low[p.v], low[done.v]);
                if (low[done.v] >= disc[p.v]) {
                    int id = num_labels++;
                    while (true) {
                        internal_check(!estack.empty(), "edge stack underflow");
                        int k = estack.back();
                        estack.pop_back();
                        label[k] = id;
                        if (k == done.pk) break;
                    }
                }
            }
        }
    }
    return label;
}

void connect_components(Surgeon& s, std::vector<std::pair<int, int>>& added) {
    std::vector<int> comp(s.n, -1);
    std::vector<int> reps;
    for (int v = 0; v < s.n; ++v) {
        if (comp[v] != -1) continue;
        reps.push_back(v);
        std::vector<int> bfs{v};
        comp[v] = static_cast<int>(reps.size()) - 1;
        while (!bfs.empty()) {
            int x = bfs.back();
            bfs.pop_back();
            for (int e : s.out_edges(x)) {
                int w = s.edst[e];
                if (comp[w] == -1) {
                    comp[w] = comp[x];
                    bfs.push_back(w);
                }
            }
        }
    }
    for (std::size_t i = 1; i < reps.size(); ++i) {
        s.add_bridge(reps[i - 1], reps[i]);
        added.emplace_back(std::min(reps[i - 1], reps[i]), std::max(reps[i - 1], reps[i]));
    }
}

void biconnect(Surgeon& s, std::vector<std::pair<int, int>>& added) {
    int num_labels = 0;
    std::vector<int> label = bcc_edge_labels(s, num_labels);
    // labels of edges added below join the merged class as they appear
    Dsu dsu(num_labels + 2 * static_cast<int>(s.edges.size()));
    label.resize(s.edges.size() + s.n, -1);

    for (int v = 0; v < s.n; ++v) {
        auto out = s.out_edges(v);
        for (std::size_t i = 0; i + 1 < out.size(); ++i) {
            int e1 = out[i], e2 = out[i + 1];
            int l1 = dsu.find(label[e1 >> 1]), l2 = dsu.find(label[e2 >> 1]);
            if (l1 == l2) continue;
            int u = s.edst[e1], w = s.edst[e2];
            // distinct blocks at v imply u != w and the chord is absent
            internal_check(u != w && !s.has(u, w), "cut repair chord already present");
            int e = s.add_corner_chord(s.twin(e1), e2);
            added.emplace_back(std::min(u, w), std::max(u, w));
            if (static_cast<std::size_t>(e >> 1) >= label.size()) label.resize((e >> 1) + 1, -1);
            dsu.unite(l1, l2);
            label[e >> 1] = dsu.find(l1);
        }
    }
}

void fill_faces(Surgeon& s, std::vector<std::pair<int, int>>& added) {
    auto walks = s.face_walks();
    for (const auto& walk : walks) {
        int L = static_cast<int>(walk.size());
        if (L <= 3) continue;
        std::vector<int> verts(L);
        for (int j = 0; j < L; ++j) verts[j] = s.esrc[walk[j]];
        {
            std::vector<int> sorted = verts;
            std::sort(sorted.begin(), sorted.end());
            internal_check(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
                           "face walk not a simple cycle");
        }
        // a vertex with no chord into this face exists in any plane graph
        int anchor = -1;
        for (int i = 0; i < L && anchor == -1; ++i) {
            bool chorded = false;
            for (int j = 0; j < L && !chorded; ++j) {
                int d = std::abs(i - j);
                if (std::min(d, L - d) >= 2 && s.has(verts[i], verts[j])) chorded = true;
            }
            if (!chorded) anchor = i;
        }
        internal_check(anchor != -1, "no chord-free vertex on face");
        int eAB = walk[anchor];
        int eBC = walk[(anchor + 1) % L];
        for (int t = 2; t <= L - 2; ++t) {
            int c = s.edst[eBC];
            int eAC = s.add_corner_chord(eAB, eBC);
            added.emplace_back(std::min(s.esrc[eAC], c), std::max(s.esrc[eAC], c));
            eAB = eAC;
            eBC = walk[(anchor + t) % L];
        }
    }
}

}  // namespace

TriangulateResult triangulate(const Embedding& emb, int required_outer_vertex) {
    require(emb.graph.n >= 3, "TooSmall", "triangulation needs at least 3 vertices");
    require(required_outer_vertex >= 0 && required_outer_vertex < emb.graph.n, "BadParameters",
            "required outer vertex out of range");
    require(is_valid_embedding(emb), "ParseError", "input embedding is not valid");

    TriangulateResult res;
    Surgeon s(emb);
    connect_components(s, res.added_edges);
    biconnect(s, res.added_edges);
    fill_faces(s, res.added_edges);

    res.embedding = s.to_embedding();
    const Graph& g = res.embedding.graph;
    internal_check(g.num_edges() == 3 * g.n - 6, "edge count is not 3n-6");
    for (auto [u, v] : emb.graph.edge_list())
        internal_check(g.has_edge(u, v), "input edge lost");

    FaceTrace ft = trace_faces(res.embedding);
    internal_check(3 * ft.num_faces() == 2 * g.num_edges(), "face/edge balance broken");
    int best = -1;
    std::array<int, 3> best_key{};
    for (int f = 0; f < ft.num_faces(); ++f) {
        const auto& face = ft.faces[f];
        internal_check(face.size() == 3, "non-triangular face after fill");
        if (std::find(face.begin(), face.end(), required_outer_vertex) == face.end()) continue;
        std::array<int, 3> key{face[0], face[1], face[2]};
        std::sort(key.begin(), key.end());
        if (best == -1 || key < best_key) {
            best = f;
            best_key = key;
        }
    }
    internal_check(best != -1, "required outer vertex on no face");
    res.embedding.outer_face = best;
    internal_check(is_valid_embedding(res.embedding), "result embedding invalid");
    return res;
}

}  // namespace planq
