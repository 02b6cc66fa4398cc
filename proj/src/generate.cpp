#include "planq/generate.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <queue>
#include <random>
#include <unordered_set>
#include <vector>

#include "planq/error.hpp"

namespace planq {

Graph grid_graph(int n) {
    require(n >= 1, "BadParameters", "grid side must be positive");
    Graph g(n * n);
    auto id = [n](int x, int y) { return y * n + x; };
    for (int y = 0; y < n; ++y)
        for (int x = 0; x < n; ++x) {
            if (x + 1 < n) g.add_edge(id(x, y), id(x + 1, y));
            if (y + 1 < n) g.add_edge(id(x, y), id(x, y + 1));
        }
    return g;
}

Graph fan_graph(int l) {
    require(l >= 1, "BadParameters", "fan parameter must be positive");
    int path = 9 * l * l + 3 * l;
    Graph g(path + 1);
    for (int i = 0; i + 1 < path; ++i) g.add_edge(i, i + 1);
    for (int i = 0; i < path; ++i) g.add_edge(i, path);
    return g;
}

Graph tightness_graph(int k, int l) {
    require(k >= 1 && l >= 1, "BadParameters", "tightness parameters must be positive");
    {
        long long size = 9LL * l * l + 3 * l + 1;
        for (int i = 1; i < k; ++i) size = size * 3 * l + 1;
        require(size <= 2'000'000, "BadParameters", "tightness instance too large");
    }
    if (k == 1) return fan_graph(l);
    Graph sub = tightness_graph(k - 1, l);
    int copies = 3 * l;
    Graph g(sub.n * copies + 1);
    int apex = sub.n * copies;
    for (int c = 0; c < copies; ++c) {
        int off = c * sub.n;
        for (auto [u, v] : sub.edge_list()) g.add_edge(off + u, off + v);
    }
    for (int v = 0; v < apex; ++v) g.add_edge(v, apex);
    return g;
}

Graph complete_graph(int n) {
    require(n >= 1, "BadParameters", "complete graph needs at least 1 vertex");
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph cycle_graph(int n) {
    require(n >= 3, "BadParameters", "cycle needs at least 3 vertices");
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph random_tree(int n, std::uint64_t seed) {
    require(n >= 1, "BadParameters", "tree needs at least 1 vertex");
    Graph g(n);
    if (n == 1) return g;
    if (n == 2) {
        g.add_edge(0, 1);
        return g;
    }
    std::mt19937_64 rng(seed);
    std::vector<int> prufer(n - 2);
    for (int& x : prufer) x = static_cast<int>(rng() % n);
    std::vector<int> count(n, 0);
    for (int x : prufer) ++count[x];
    std::priority_queue<int, std::vector<int>, std::greater<int>> leaves;
    for (int v = 0; v < n; ++v)
        if (count[v] == 0) leaves.push(v);
    for (int x : prufer) {
        int leaf = leaves.top();
        leaves.pop();
        g.add_edge(std::min(leaf, x), std::max(leaf, x));
        if (--count[x] == 0) leaves.push(x);
    }
    int a = leaves.top();
    leaves.pop();
    int b = leaves.top();
    g.add_edge(std::min(a, b), std::max(a, b));
    return g;
}

namespace {

// Triangulated sphere as a doubly connected edge list. Halfedges 2k and 2k+1
// are the two directions of undirected edge k; he_next walks each triangle.
struct Dcel {
    std::vector<int> he_next, he_origin;
    std::unordered_set<long long> edge_set;
    int n;

    explicit Dcel(int n_) : n(n_) {}
    int twin(int h) const { return h ^ 1; }
    long long key(int u, int v) const {
        if (u > v) std::swap(u, v);
        return static_cast<long long>(u) * n + v;
    }
    bool has(int u, int v) const { return edge_set.count(key(u, v)) > 0; }
    int alloc(int u, int v) {
        int h = static_cast<int>(he_next.size());
        he_next.insert(he_next.end(), {-1, -1});
        he_origin.insert(he_origin.end(), {u, v});
        edge_set.insert(key(u, v));
        return h;
    }

    void init_double_triangle() {
        int e01 = alloc(0, 1), e12 = alloc(1, 2), e20 = alloc(2, 0);
        he_next[e01] = e12;
        he_next[e12] = e20;
        he_next[e20] = e01;
        he_next[twin(e20)] = twin(e12);
        he_next[twin(e12)] = twin(e01);
        he_next[twin(e01)] = twin(e20);
    }

    // Splits the triangle containing halfedge h into three around new vertex v.
    void insert_vertex(int v, int h) {
        int h2 = he_next[h], h3 = he_next[h2];
        int a = he_origin[h], b = he_origin[h2], c = he_origin[h3];
        int av = alloc(a, v), bv = alloc(b, v), cv = alloc(c, v);
        he_next[h] = bv;
        he_next[bv] = twin(av);
        he_next[twin(av)] = h;
        he_next[h2] = cv;
        he_next[cv] = twin(bv);
        he_next[twin(bv)] = h2;
        he_next[h3] = av;
        he_next[av] = twin(cv);
        he_next[twin(cv)] = h3;
    }

    // Replaces edge (a, b) by (c, d) where c, d are the opposite corners of
    // the two triangles at h. Legal only when c != d and (c, d) is absent.
    bool flip(int h) {
        int ht = twin(h);
        int h1 = he_next[h], h2 = he_next[h1];
        int g1 = he_next[ht], g2 = he_next[g1];
        int a = he_origin[h], b = he_origin[ht];
        int c = he_origin[h2], d = he_origin[g2];
        if (c == d || has(c, d)) return false;
        edge_set.erase(key(a, b));
        edge_set.insert(key(c, d));
        he_origin[h] = c;
        he_origin[ht] = d;
        he_next[h] = g2;
        he_next[g2] = h1;
        he_next[h1] = h;
        he_next[ht] = h2;
        he_next[h2] = g1;
        he_next[g1] = ht;
        return true;
    }

    Embedding to_embedding() const {
        Embedding emb;
        emb.graph = Graph(n);
        int m = static_cast<int>(he_next.size()) / 2;
        for (int k = 0; k < m; ++k) emb.graph.add_edge(he_origin[2 * k], he_origin[2 * k + 1]);
        std::vector<int> first(n, -1);
        for (int h = 0; h < 2 * m; ++h)
            if (first[he_origin[h]] == -1) first[he_origin[h]] = h;
        emb.rotation.assign(n, {});
        for (int v = 0; v < n; ++v) {
            int h = first[v];
            assert(h != -1);
            do {
                emb.rotation[v].push_back(he_origin[twin(h)]);
                h = he_next[twin(h)];
            } while (h != first[v]);
        }
        return emb;
    }
};

}  // namespace

TriangulationSample random_triangulation(int n, std::uint64_t seed) {
    require(n >= 3, "BadParameters", "triangulation needs at least 3 vertices");
    std::mt19937_64 rng(seed);
    Dcel d(n);
    d.init_double_triangle();
    for (int v = 3; v < n; ++v) {
        int h = static_cast<int>(rng() % d.he_next.size());
        d.insert_vertex(v, h);
    }
    for (int i = 0; i < 6 * n; ++i) {
        int h = static_cast<int>(rng() % d.he_next.size());
        d.flip(h);
    }

    TriangulationSample res;
    res.embedding = d.to_embedding();
    res.graph = res.embedding.graph;
    FaceTrace ft = trace_faces(res.embedding);
    int best = 0;
    std::array<int, 3> best_key{res.embedding.graph.n, 0, 0};
    for (int f = 0; f < ft.num_faces(); ++f) {
        std::array<int, 3> key{ft.faces[f][0], ft.faces[f][1], ft.faces[f][2]};
        std::sort(key.begin(), key.end());
        if (key < best_key) {
            best = f;
            best_key = key;
        }
    }
    res.embedding.outer_face = best;
    assert(is_valid_embedding(res.embedding));
    return res;
}

Generated generate(const GeneratorSpec& spec) {
    Generated out;
    if (spec.kind == "grid") {
        out.graph = grid_graph(spec.n);
    } else if (spec.kind == "fan") {
        out.graph = fan_graph(spec.l);
    } else if (spec.kind == "tightness") {
        out.graph = tightness_graph(spec.k, spec.l);
    } else if (spec.kind == "complete") {
        out.graph = complete_graph(spec.n);
    } else if (spec.kind == "cycle") {
        out.graph = cycle_graph(spec.n);
    } else if (spec.kind == "tree") {
        out.graph = random_tree(spec.n, spec.seed);
    } else if (spec.kind == "random_triangulation") {
        auto sample = random_triangulation(spec.n, spec.seed);
        out.graph = sample.graph;
        out.embedding = sample.embedding;
        out.has_embedding = true;
    } else {
        fail("BadParameters", "unknown generator kind: " + spec.kind);
    }
    return out;
}

}  // namespace planq
