#include "planq/graph.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "planq/error.hpp"

namespace planq {

int Graph::num_edges() const {
    long long total = 0;
    for (const auto& list : adj) total += static_cast<long long>(list.size());
    return static_cast<int>(total / 2);
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || u >= n || v < 0 || v >= n || u == v) return false;
    const auto& list = adj[u];
    return std::binary_search(list.begin(), list.end(), v);
}

void Graph::add_edge(int u, int v) {
    require(u >= 0 && u < n && v >= 0 && v < n, "ParseError", "edge endpoint out of range");
    require(u != v, "ParseError", "self-loop rejected");
    require(!has_edge(u, v), "ParseError", "duplicate edge rejected");
    auto& lu = adj[u];
    lu.insert(std::lower_bound(lu.begin(), lu.end(), v), v);
    auto& lv = adj[v];
    lv.insert(std::lower_bound(lv.begin(), lv.end(), u), u);
}

bool Graph::add_edge_if_absent(int u, int v) {
    if (u == v || has_edge(u, v)) return false;
    add_edge(u, v);
    return true;
}

std::vector<std::pair<int, int>> Graph::edge_list() const {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(num_edges());
    for (int u = 0; u < n; ++u)
        for (int v : adj[u])
            if (u < v) edges.emplace_back(u, v);
    return edges;
}

int edge_index(const std::vector<std::pair<int, int>>& edges, int u, int v) {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(u, v));
    if (it == edges.end() || *it != std::make_pair(u, v)) return -1;
    return static_cast<int>(it - edges.begin());
}

std::vector<int> component_labels(const Graph& g) {
    std::vector<int> label(g.n, -1);
    int next = 0;
    std::vector<int> stack;
    for (int s = 0; s < g.n; ++s) {
        if (label[s] != -1) continue;
        label[s] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.adj[v])
                if (label[w] == -1) {
                    label[w] = next;
                    stack.push_back(w);
                }
        }
        ++next;
    }
    return label;
}

int num_components(const Graph& g) {
    auto label = component_labels(g);
    int best = 0;
    for (int x : label) best = std::max(best, x + 1);
    return g.n == 0 ? 0 : best;
}

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    long long n = -1, m = -1;
    long long edges_read = 0;
    Graph g;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n >> m)) {
                std::string tok;
                std::istringstream probe(line);
                if (probe >> tok) fail("ParseError", "expected header 'n m'");
                n = -1;
                continue;
            }
            require(n >= 0 && m >= 0, "ParseError", "negative header values");
            require(n <= 10'000'000 && m <= 30'000'000, "ParseError", "header values too large");
            std::string extra;
            require(!(ls >> extra), "ParseError", "trailing tokens after header");
            g = Graph(static_cast<int>(n));
            continue;
        }
        long long u, v;
        if (!(ls >> u >> v)) {
            std::string tok;
            std::istringstream probe(line);
            if (probe >> tok) fail("ParseError", "expected edge line 'u v'");
            continue;
        }
        std::string extra;
        require(!(ls >> extra), "ParseError", "trailing tokens after edge");
        require(edges_read < m, "ParseError", "more edges than declared");
        require(u >= 0 && u < n && v >= 0 && v < n, "ParseError", "edge endpoint out of range");
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
        ++edges_read;
    }
    require(n >= 0, "ParseError", "missing header 'n m'");
    require(edges_read == m, "ParseError", "fewer edges than declared");
    return g;
}

std::string format_graph(const Graph& g) {
    std::ostringstream out;
    auto edges = g.edge_list();
    out << g.n << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges) out << u << ' ' << v << '\n';
    return out.str();
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    std::vector<int> index(g.n, -1);
    for (int i = 0; i < static_cast<int>(vertices.size()); ++i) {
        assert(index[vertices[i]] == -1);
        index[vertices[i]] = i;
    }
    Graph h(static_cast<int>(vertices.size()));
    for (int i = 0; i < h.n; ++i)
        for (int w : g.adj[vertices[i]]) {
            int j = index[w];
            if (j > i) h.add_edge(i, j);
        }
    return h;
}

}  // namespace planq
