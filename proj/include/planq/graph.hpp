#pragma once
#include <string>
#include <utility>
#include <vector>

namespace planq {

// Simple undirected graph on vertices 0..n-1.
// Adjacency lists are kept sorted ascending; no self-loops, no parallel edges.
struct Graph {
    int n = 0;
    std::vector<std::vector<int>> adj;

    Graph() = default;
    explicit Graph(int n_) : n(n_), adj(n_) {}

    int num_edges() const;
    bool has_edge(int u, int v) const;
    // Inserts keeping both lists sorted. Rejects self-loops and duplicates.
    void add_edge(int u, int v);
    // Adds the edge only if absent; returns true if it was added.
    bool add_edge_if_absent(int u, int v);
    int degree(int v) const { return static_cast<int>(adj[v].size()); }

    // All edges as (u, v) with u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edge_list() const;
};

// Index of edge (u, v) in graph.edge_list() order, or -1 if absent.
int edge_index(const std::vector<std::pair<int, int>>& edges, int u, int v);

// Connected-component labels, 0-based, in order of smallest contained vertex.
std::vector<int> component_labels(const Graph& g);
int num_components(const Graph& g);

// Text format: first non-comment line "n m", then m lines "u v".
// Lines starting with '#' are comments. Throws ParseError on malformed input.
Graph parse_graph(const std::string& text);
std::string format_graph(const Graph& g);

// Induced subgraph on `vertices` (relabeled 0..k-1 in the given order).
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

}  // namespace planq
