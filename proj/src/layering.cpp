#include "planq/layering.hpp"

#include <algorithm>
#include <queue>

#include "planq/error.hpp"

namespace planq {

namespace {

LayeringResult bfs_from(const Graph& g, const std::vector<int>& roots) {
    BfsForest f;
    f.roots = roots;
    f.parent.assign(g.n, -1);
    f.depth.assign(g.n, -1);
    std::queue<int> q;
    for (int r : roots) {
        f.depth[r] = 0;
        q.push(r);
    }
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : g.adj[v])
            if (f.depth[w] == -1) {
                f.depth[w] = f.depth[v] + 1;
                f.parent[w] = v;  // neighbours scanned ascending, so parent is the smallest id
                q.push(w);
            }
    }
    Layering l;
    l.layer_of.assign(g.n, -1);
    int height = 0;
    for (int v = 0; v < g.n; ++v) height = std::max(height, f.depth[v] + 1);
    l.layers.assign(height, {});
    for (int v = 0; v < g.n; ++v) {
        l.layer_of[v] = f.depth[v];
        if (f.depth[v] >= 0) l.layers[f.depth[v]].push_back(v);  // callers reject uncovered vertices
    }
    return {std::move(l), std::move(f)};
}

}  // namespace

LayeringResult bfs_layering(const Graph& g, const std::vector<int>& roots) {
    auto comp = component_labels(g);
    int k = num_components(g);
    std::vector<int> seen(k, 0);
    for (int r : roots) {
        require(r >= 0 && r < g.n, "BadRoots", "root out of range");
        require(!seen[comp[r]]++, "BadRoots", "two roots in one component");
    }
    require(static_cast<int>(roots.size()) == k, "BadRoots",
            "need exactly one root per connected component");
    return bfs_from(g, roots);
}

LayeringResult bfs_layering_auto(const Graph& g) {
    auto comp = component_labels(g);
    int k = num_components(g);
    std::vector<int> roots(k, -1);
    for (int v = g.n - 1; v >= 0; --v) roots[comp[v]] = v;
    return bfs_from(g, roots);
}

LayeringResult bfs_layering_multi(const Graph& g, const std::vector<int>& roots) {
    require(!roots.empty() || g.n == 0, "BadRoots", "no roots given");
    std::vector<char> used(g.n, 0);
    for (int r : roots) {
        require(r >= 0 && r < g.n, "BadRoots", "root out of range");
        require(!used[r], "BadRoots", "duplicate root");
        used[r] = 1;
    }
    auto res = bfs_from(g, roots);
    for (int v = 0; v < g.n; ++v)
        require(res.forest.depth[v] >= 0, "BadRoots", "some component has no root");
    return res;
}

bool is_vertical_path(const BfsForest& forest, const std::vector<int>& path) {
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
        if (forest.parent[path[i]] != path[i + 1]) return false;
    return true;
}

bool is_valid_layering(const Graph& g, const Layering& l) {
    if (static_cast<int>(l.layer_of.size()) != g.n) return false;
    std::vector<int> count(l.num_layers(), 0);
    for (int v = 0; v < g.n; ++v) {
        int d = l.layer_of[v];
        if (d < 0 || d >= l.num_layers()) return false;
        ++count[d];
    }
    for (int d = 0; d < l.num_layers(); ++d) {
        const auto& layer = l.layers[d];
        if (static_cast<int>(layer.size()) != count[d]) return false;
        if (!std::is_sorted(layer.begin(), layer.end())) return false;
        for (int v : layer)
            if (v < 0 || v >= g.n || l.layer_of[v] != d) return false;
    }
    for (int u = 0; u < g.n; ++u)
        for (int v : g.adj[u])
            if (std::abs(l.layer_of[u] - l.layer_of[v]) > 1) return false;
    return true;
}

}  // namespace planq
