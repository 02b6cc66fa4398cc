#pragma once
#include <vector>

#include "planq/graph.hpp"

namespace planq {

struct ExactQueueResult {
    int value = 0;
    std::vector<int> witness_order;  // ordering achieving the minimum
};

// Minimum over all vertex orderings of max_rainbow, by exhaustive search with
// reversal symmetry and prefix pruning. |V| <= 9, TooLarge otherwise.
ExactQueueResult exact_queue_number(const Graph& g);

// Exact treewidth by vertex-subset dynamic programming. |V| <= 12, TooLarge
// otherwise.
int exact_treewidth(const Graph& g);

}  // namespace planq
