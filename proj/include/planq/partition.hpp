#pragma once
#include <string>
#include <utility>
#include <vector>

#include "planq/embedding.hpp"
#include "planq/graph.hpp"
#include "planq/layering.hpp"

namespace planq {

// Vertex partition together with its quotient graph. legs[p] holds up to
// three vertical paths (each listed deepest vertex first) whose union is part
// p; legs is empty for partitions without that structure (widened outputs).
struct Partition {
    std::vector<std::vector<int>> parts;  // sorted ascending inside each part
    std::vector<int> part_of;
    std::vector<std::vector<std::vector<int>>> legs;
    Graph quotient;
    int declared_layered_width = 1;

    int num_parts() const { return static_cast<int>(parts.size()); }
};

struct TreeDecomposition {
    std::vector<std::vector<int>> bags;  // sorted ascending inside each bag
    std::vector<std::pair<int, int>> tree_edges;

    int num_nodes() const { return static_cast<int>(bags.size()); }
    int width() const;  // max bag size - 1; -1 when there are no bags
};

struct PartitionResult {
    Partition partition;
    TreeDecomposition td;  // decomposes the quotient
    Layering layering;     // the layering the width is declared against
    BfsForest forest;      // the forest the legs are vertical in
};

// Colours every vertex 1, 2 or 3: boundary vertices by which block of the
// outer cycle they lie in, interior vertices by the colour of the first
// boundary vertex on their rootward parent chain. r1, r2, r3 must split the
// outer face walk of near_tri into three consecutive nonempty blocks (any
// rotation of the walk); otherwise BrokenFrame is thrown.
std::vector<int> sperner_colour(const Embedding& near_tri, const BfsForest& forest,
                                const std::vector<int>& r1, const std::vector<int>& r2,
                                const std::vector<int>& r3);

// First internal face (in face-scan order) whose vertices carry all three
// colours. Throws NoTrichromaticFace if none exists.
int find_sperner_triangle(const Embedding& near_tri, const std::vector<int>& colour);

// Partition of a triangulation into vertical paths of the given BFS tree,
// with a tree-decomposition of the quotient whose bags have size <= 9.
// The forest must be a BFS tree of tri.graph whose root lies on the outer
// face (RootNotOnOuterFace otherwise). The three outer vertices become
// singleton parts sharing the root bag.
PartitionResult vertical_path_partition(const Embedding& tri, const BfsForest& forest);

// Partition of a triangulation into tripods (<= 3 vertical paths with
// pairwise adjacent lower ends), bags <= 4, layered width <= 3. Internally
// rebuilds the layering by inserting an apex vertex into the outer face,
// running BFS from it and stripping it; the result's forest has the three
// outer vertices as roots. The given forest is only checked for validity
// (root on the outer face, RootNotOnOuterFace otherwise).
PartitionResult tripod_partition(const Embedding& tri, const BfsForest& forest);

struct WidenResult {
    Partition partition;
    TreeDecomposition td;
};

// Converts a layered-width-l partition into a layered-width-1 partition by
// splitting every part into per-layer slot classes; the quotient decomposition
// widens to at most (k+1)*l - 1 where k is the width of td. Throws
// WidthMismatch if the measured width exceeds the declared one.
WidenResult widen_to_width1(const Graph& g, const Partition& p, const Layering& l,
                            const TreeDecomposition& td);

struct PartitionReport {
    bool is_valid = false;
    int measured_layered_width = 0;
    int quotient_edge_diff = 0;  // symmetric difference vs recomputed quotient
};

PartitionReport validate_partition(const Graph& g, const Partition& p, const Layering& l);

struct TdReport {
    bool is_valid = false;
    int width = -1;
    std::string violation;  // empty when valid; names the vertex or edge
};

TdReport validate_tree_decomposition(const Graph& g, const TreeDecomposition& td);

// Structural checks used by tests: every part is one vertical path / a tripod
// whose lower endpoints are pairwise adjacent in clique_host.
bool parts_are_vertical_paths(const Partition& p, const BfsForest& f);
bool parts_are_tripods(const Partition& p, const BfsForest& f, const Graph& clique_host);

}  // namespace planq
