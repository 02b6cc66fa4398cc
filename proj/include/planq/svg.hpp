#pragma once
#include <string>

#include "planq/graph.hpp"
#include "planq/layout.hpp"

namespace planq {

// Arc diagram: vertices on a horizontal line in ordering position, edges as
// semicircular arcs coloured by queue. Output bytes are deterministic.
std::string render_arc_diagram(const Graph& g, const QueueLayout& layout);

}  // namespace planq
