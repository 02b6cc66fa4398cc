#pragma once
#include <vector>

#include "planq/graph.hpp"

namespace planq {

// Partition of the vertex set into ordered layers; every edge joins the same
// layer or consecutive layers once produced by bfs_layering.
struct Layering {
    std::vector<std::vector<int>> layers;  // layers[d] sorted ascending
    std::vector<int> layer_of;             // vertex -> layer index

    int num_layers() const { return static_cast<int>(layers.size()); }
};

// BFS forest: one root per connected component; depth[v] = dist to its root.
// With several roots in one component, depth[v] = dist to the nearest root and
// parent chains descend toward some root (parent[root] = -1).
struct BfsForest {
    std::vector<int> roots;
    std::vector<int> parent;
    std::vector<int> depth;
};

struct LayeringResult {
    Layering layering;
    BfsForest forest;
};

// BFS layering from the given roots, one root per connected component.
// Throws BadRoots if roots are out of range, duplicated, or do not hit every
// component exactly once. Ties between equal-depth neighbours resolve to the
// smallest-id parent.
LayeringResult bfs_layering(const Graph& g, const std::vector<int>& roots);

// Convenience: smallest vertex id of each component as its root.
LayeringResult bfs_layering_auto(const Graph& g);

// Multi-source BFS; roots may share a component (depth = dist to nearest root).
// Used internally by constructions that add an apex and strip it afterwards.
LayeringResult bfs_layering_multi(const Graph& g, const std::vector<int>& roots);

// True iff `path` is vertical in `forest`: path[i+1] == parent[path[i]] for all
// i, i.e. the walk is listed deepest vertex first and climbs one step at a time.
bool is_vertical_path(const BfsForest& forest, const std::vector<int>& path);

// Checks layers are a partition, sorted, consistent with layer_of, and every
// edge of g spans at most one level.
bool is_valid_layering(const Graph& g, const Layering& l);

}  // namespace planq
