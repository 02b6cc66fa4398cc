#include "planq/embedding.hpp"

#include <algorithm>
#include <cassert>

namespace planq {

int rotation_index(const Embedding& emb, int u, int v) {
    const auto& rot = emb.rotation[u];
    for (int i = 0; i < static_cast<int>(rot.size()); ++i)
        if (rot[i] == v) return i;
    return -1;
}

FaceTrace trace_faces(const Embedding& emb) {
    const int n = emb.graph.n;
    FaceTrace ft;
    ft.face_of.resize(n);
    for (int v = 0; v < n; ++v) ft.face_of[v].assign(emb.rotation[v].size(), -1);

    for (int u = 0; u < n; ++u)
        for (int i = 0; i < static_cast<int>(emb.rotation[u].size()); ++i) {
            if (ft.face_of[u][i] != -1) continue;
            int f = ft.num_faces();
            ft.faces.emplace_back();
            int cu = u, ci = i;
            do {
                ft.face_of[cu][ci] = f;
                ft.faces[f].push_back(cu);
                int cv = emb.rotation[cu][ci];
                int back = rotation_index(emb, cv, cu);
                assert(back != -1);
                int deg = static_cast<int>(emb.rotation[cv].size());
                cu = cv;
                ci = (back + 1) % deg;
            } while (!(cu == u && ci == i));
        }
    return ft;
}

int face_at(const Embedding& emb, const FaceTrace& ft, int u, int v) {
    int i = rotation_index(emb, u, v);
    if (i == -1) return -1;
    return ft.face_of[u][i];
}

bool is_valid_embedding(const Embedding& emb) {
    const Graph& g = emb.graph;
    if (static_cast<int>(emb.rotation.size()) != g.n) return false;
    for (int v = 0; v < g.n; ++v) {
        auto sorted = emb.rotation[v];
        std::sort(sorted.begin(), sorted.end());
        if (sorted != g.adj[v]) return false;
    }
    auto ft = trace_faces(emb);
    if (ft.num_faces() > 0) {
        if (emb.outer_face < 0 || emb.outer_face >= ft.num_faces()) return false;
    } else if (emb.outer_face != -1) {
        return false;
    }
    // Euler's formula summed over the components that carry edges: isolated
    // vertices trace no face walk, so they are excluded on both sides.
    int iso_vertices = 0;
    for (int v = 0; v < g.n; ++v)
        if (g.adj[v].empty()) ++iso_vertices;
    int components = num_components(g);
    long long euler = static_cast<long long>(g.n - iso_vertices) - g.num_edges() + ft.num_faces();
    return euler == 2LL * (components - iso_vertices);
}

}  // namespace planq
