#pragma once
#include <cstdint>
#include <string>

#include "planq/embedding.hpp"
#include "planq/graph.hpp"

namespace planq {

Graph grid_graph(int n);                 // n*n vertices, id = y*n + x
Graph fan_graph(int l);                  // path on 9l^2+3l vertices plus a dominant vertex (last id)
Graph tightness_graph(int k, int l);     // recursive: 3l copies of level k-1 plus a dominant vertex
Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph random_tree(int n, std::uint64_t seed);

struct TriangulationSample {
    Graph graph;
    Embedding embedding;
};

// Simple plane triangulation with 3n-6 edges: repeated random vertex
// insertion into faces, then random legal edge flips. Deterministic per
// (n, seed); not uniform over all triangulations. n >= 3.
TriangulationSample random_triangulation(int n, std::uint64_t seed);

struct GeneratorSpec {
    std::string kind;  // grid | fan | tightness | random_triangulation | complete | cycle | tree
    int n = 0;
    int k = 0;
    int l = 0;
    std::uint64_t seed = 0;
};

struct Generated {
    Graph graph;
    bool has_embedding = false;
    Embedding embedding;  // set for planar-by-construction kinds
};

// Dispatches on spec.kind; BadParameters for unknown kinds or out-of-range
// parameters.
Generated generate(const GeneratorSpec& spec);

}  // namespace planq
