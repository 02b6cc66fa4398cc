#pragma once
#include <utility>
#include <vector>

#include "planq/embedding.hpp"
#include "planq/graph.hpp"
#include "planq/layering.hpp"
#include "planq/layout.hpp"
#include "planq/partition.hpp"

namespace planq {

// Orders H by a clique-rooted breadth-first traversal of the chordal
// completion of the bags: per component the earliest bag comes first, each
// deeper level is grouped by the leftmost already-placed neighbour, and every
// group is ordered by the same rule recursively, so groups occupy nested
// intervals. Queues are assigned by nesting depth on that order. The count
// depends on the decomposition width only, not on |V(H)|; it is verified
// against that contract by the tests. Throws InvalidDecomposition if td does
// not decompose H.
QueueLayout tree_decomposition_layout(const Graph& h, const TreeDecomposition& td);

enum class AssignStrategy { Depth, Structured };

// Lemma-style assembly: order vertices by (layer, host position of part, id);
// queues either by nesting depth (Depth, the default) or by the four explicit
// edge classes (Structured): intra-layer intra-part paired like
// complete_graph_layout, intra-layer inter-part per host queue, inter-layer
// intra-part, inter-layer inter-part per (host queue, direction). Both stay
// within 3*l*k + floor(3*l/2) queues for layered width l and host count k.
// Throws WidthMismatch (measured width > declared) and HostMismatch
// (host_layout is not over the quotient's vertices).
QueueLayout partition_queue_layout(const Graph& g, const Partition& p, const Layering& l,
                                   const QueueLayout& host_layout,
                                   AssignStrategy strategy = AssignStrategy::Depth);

enum class PartitionMode { Width1, Tripod };

struct PipelineResult {
    Embedding triangulation;  // the augmented plane graph the partition was built on
    std::vector<std::pair<int, int>> added_edges;
    bool augmented = false;
    Layering layering;
    BfsForest forest;
    Partition partition;  // quotient restricted to the input graph's edges
    TreeDecomposition td;
    QueueLayout host_layout;  // layout of partition.quotient
    QueueLayout layout;       // final layout of the input graph
};

// embed -> triangulate (outer vertex 0) -> BFS layering -> partition ->
// tree_decomposition_layout of quotient -> partition_queue_layout.
// Throws NonPlanar for non-planar input. Graphs with fewer than 3 vertices
// are laid out directly.
PipelineResult planar_pipeline(const Graph& g, PartitionMode mode,
                               AssignStrategy strategy = AssignStrategy::Depth);

}  // namespace planq
