#pragma once
#include "planq/embedding.hpp"
#include "planq/graph.hpp"

namespace planq {

// Left-right planarity test with embedding phase. Returns a combinatorial
// embedding (clockwise rotations) with outer_face = first traced face.
// Throws NonPlanar for non-planar input. Handles disconnected graphs.
Embedding planar_embed(const Graph& g);

bool is_planar(const Graph& g);

}  // namespace planq
