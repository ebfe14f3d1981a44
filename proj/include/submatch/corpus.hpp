#pragma once

#include <cstdint>
#include <vector>

#include "submatch/graph.hpp"

namespace submatch {

// Every connected graph with 1..max_edges edges, one representative per
// isomorphism class (vertex counts 2..max_edges+1). Deterministic order.
// max_edges <= 6.
std::vector<Graph> connected_graph_corpus(uint32_t max_edges);

// Path, cycle and star fixtures with up to max_edges edges (the largest two
// sizes of each family) plus the triangle.
std::vector<Graph> fixture_graphs(uint32_t max_edges);

Graph petersen_graph();

}  // namespace submatch
