#pragma once
#include <string>
#include <vector>

#include "planq/graph.hpp"

namespace planq {

// Queue layout: a vertex ordering plus a queue index per edge. queue_of is
// aligned with graph.edge_list(); inside one queue no two edges nest.
struct QueueLayout {
    std::vector<int> order;  // position -> vertex
    std::vector<int> pos;    // vertex -> position
    std::vector<int> queue_of;
    int queue_count = 0;
};

std::vector<int> positions_of(const std::vector<int>& order);

// Maximum number of pairwise nested edges under the ordering (longest chain
// under strict interval containment).
int max_rainbow(const Graph& g, const std::vector<int>& order);

// Queue of an edge = number of edges strictly containing it on a longest
// chain; queue_count equals max_rainbow (Mirsky: depth classes are
// nest-antichains).
QueueLayout assign_queues_by_depth(const Graph& g, const std::vector<int>& order);

struct LayoutReport {
    bool is_valid = false;
    int queue_count = 0;
    std::string first_violation;  // empty when valid; names the nested pair
};

// Brute-force pairwise check for <= 10^4 edges, sorted sweep above.
LayoutReport validate_queue_layout(const Graph& g, const QueueLayout& layout);

// K_l on the natural order; edge lengths 2q-1 and 2q share queue q-1; exactly
// floor(l/2) queues.
QueueLayout complete_graph_layout(int l);

// n x n grid (vertex id = y*n + x) ordered by x+y then x; exactly one queue
// for n >= 2.
QueueLayout grid_layout(int n);

// Ordering = host ordering with every host vertex replaced by its block
// (copies ascending); queues by depth. Blown vertex ids are block-offset
// based: block i covers ids offset(i)..offset(i)+block_sizes[i]-1. Edges of
// blown must join blocks of host-adjacent vertices. Throws NotAOneQueueHost
// if host_layout uses more than one queue.
QueueLayout blowup_layout(const Graph& host, const QueueLayout& host_layout,
                          const std::vector<int>& block_sizes, const Graph& blown);

}  // namespace planq
