#pragma once
#include <array>
#include <utility>
#include <vector>

#include "planq/graph.hpp"
#include "planq/layering.hpp"
#include "planq/layout.hpp"
#include "planq/partition.hpp"

namespace planq {

struct PathPowerTarget {
    std::pair<int, int> edge;
    std::vector<int> witness;  // path in the base graph from edge.first to edge.second
};

struct PathPowerResult {
    Graph target;
    QueueLayout layout;
    int edge_colours_used = 0;  // the chi' entering the bound formula
};

// Lays out the graph formed by `targets` on the base ordering. Each target
// edge's queue is keyed by its witness length and the per-step (direction
// sign, base queue, edge colour) signature. Witness paths must have length
// <= c with internal vertex degrees <= max_deg (BadWitness otherwise).
// Queue count <= 2*(2*k*chi')^(c+1) for a k-queue base layout.
PathPowerResult path_power_layout(const Graph& base, const QueueLayout& base_layout, int c,
                                  int max_deg, const std::vector<PathPowerTarget>& targets);

struct ComplementDecomposition {
    std::vector<int> vertices;  // X_j, ascending
    Graph induced;              // relabeled to 0..|X_j|-1 in that order
    TreeDecomposition td;       // over the relabeled vertices
};

struct LowTreewidthColouring {
    int c = 0;
    Layering layering;                           // of the internal triangulation
    std::vector<std::vector<int>> classes;       // class j spans layer residues 2j-2..2j (mod 2c)
    std::vector<ComplementDecomposition> complements;  // X_j = layers with residue != 2j-1
};

// Groups BFS layers modulo 2c; dropping any class' middle residue splits the
// graph into blocks of 2c-1 consecutive layers, each decomposed through a
// width-1 partition with bags <= 9, so every X_j gets treewidth
// <= 9*(2c-1) - 1. Throws NonPlanar; c must be >= 2 (BadParameters).
LowTreewidthColouring low_treewidth_colouring(const Graph& g, int c);

struct ProductInjection {
    Graph host;          // the quotient H
    int path_length = 0; // number of layers
    int clique_size = 1;
    std::vector<std::array<int, 3>> map;  // v -> (H-vertex, path index, clique slot)
};

// v -> (part, layer, slot in part-within-layer). Requires measured layered
// width <= declared (WidthMismatch otherwise); injectivity and
// adjacency-preservation are certified before returning.
ProductInjection product_injection(const Graph& g, const Partition& p, const Layering& l);

}  // namespace planq
