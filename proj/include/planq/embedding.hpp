#pragma once
#include <vector>

#include "planq/graph.hpp"

namespace planq {

// Combinatorial embedding: rotation[v] lists the neighbours of v in clockwise
// order around v. outer_face indexes into trace_faces(...) and marks the
// unbounded face.
struct Embedding {
    Graph graph;
    std::vector<std::vector<int>> rotation;
    int outer_face = -1;
};

// Faces of an embedding. Directed edge (u -> v) is identified by the position
// of v in rotation[u]; the walk continues with (v, successor of u in
// rotation[v]). faces[f] lists face vertices in walk order; face_of[u][i] is
// the face of the directed edge (u -> rotation[u][i]).
struct FaceTrace {
    std::vector<std::vector<int>> faces;
    std::vector<std::vector<int>> face_of;

    int num_faces() const { return static_cast<int>(faces.size()); }
};

FaceTrace trace_faces(const Embedding& emb);

// Face of the directed edge (u -> v).
int face_at(const Embedding& emb, const FaceTrace& ft, int u, int v);

// Position of v in rotation[u], or -1.
int rotation_index(const Embedding& emb, int u, int v);

// Checks rotation[v] is a permutation of adj[v] for all v, outer_face is in
// range (-1 when no face exists), and Euler's relation holds on every
// component that carries edges.
bool is_valid_embedding(const Embedding& emb);

}  // namespace planq
