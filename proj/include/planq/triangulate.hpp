#pragma once
#include <utility>
#include <vector>

#include "planq/embedding.hpp"

namespace planq {

struct TriangulateResult {
    Embedding embedding;                            // maximal planar, all faces triangles
    std::vector<std::pair<int, int>> added_edges;   // in insertion order
};

// Augments an embedded planar graph to a maximal planar graph (every face a
// triangle, including the outer one) by edge additions only: connect
// components, then biconnect, then fan-triangulate each large face. The
// returned outer face contains required_outer_vertex; among its incident
// triangles the one with lexicographically smallest vertex triple is chosen.
// Throws TooSmall if the graph has fewer than 3 vertices.
TriangulateResult triangulate(const Embedding& emb, int required_outer_vertex);

}  // namespace planq
