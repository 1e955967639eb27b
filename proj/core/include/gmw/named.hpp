#pragma once

#include <utility>
#include <vector>

#include "gmw/graph.hpp"

namespace gmw {

Graph complete_graph(int n);

Graph cycle_graph(int n);

Graph complete_multipartite(const std::vector<int>& part_sizes);

// K_t minus one edge.
Graph kt_minus(int t);

// The two nonisomorphic members of the K_t^= family: K_t minus two disjoint
// edges (first), and K_t minus two edges sharing an end (second). Requires
// t >= 4 so the removed edges can be placed distinctly.
std::pair<Graph, Graph> kt_doubleminus(int t);

// Petersen graph (outer C5 0-4, inner pentagram 5-9, spokes i -- i+5).
Graph petersen_graph();

}  // namespace gmw
