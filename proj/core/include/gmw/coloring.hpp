#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "gmw/graph.hpp"

namespace gmw {

// Proper vertex coloring: color index per vertex plus palette size.
struct Coloring {
    std::vector<int> colors;
    int palette_size = 0;
};

bool is_proper(const Graph& g, const Coloring& c);

// Exact chromatic number with witness, branch and bound with saturation-degree
// ordering and a clique lower bound. Guarded to |G| <= 32.
std::pair<int, Coloring> chromatic_number(const Graph& g);

// Connected component of v in the subgraph induced by color classes a and b.
std::uint64_t kempe_component(const Graph& g, const Coloring& c, int v, int a, int b);

// Exchange colors a and b on a kempe_component output; properness preserved.
Coloring kempe_swap(const Graph& g, const Coloring& c, std::uint64_t component, int a, int b);

// chi(G) == k and every proper minor (full minor lattice, deduplicated by
// canonical form) is (k-1)-colorable. Guarded to |G| <= 8.
bool is_contraction_critical(const Graph& g, int k);

// Per-vertex record of the contraction-criticality degree/independence test.
struct VertexCriticality {
    int vertex;
    int degree;
    int alpha_neighborhood;     // alpha(G[N(x)])
    int alpha_bound;            // d(x) - k + 2
    bool degree_ok;             // d(x) >= k - 1
    bool alpha_ok;              // alpha <= bound
};

// Refutation profile: a violated record certifies G is NOT k-contraction-
// critical. Also carries the degree-count arithmetic used with the extremal
// edge bound (delta-degree vertices >= (delta+1)|G| - 2e when positive).
struct ProofProfile {
    int k = 0;
    int order = 0;
    int edges = 0;
    int min_degree = 0;
    int extremal_bound = 0;          // 6|G| - 20
    bool meets_extremal = false;     // e <= 6|G| - 20
    int forced_min_degree_count = 0; // lower bound on # vertices of degree delta
    std::vector<VertexCriticality> per_vertex;
    std::vector<int> degree_counts;  // degree_counts[d] = # vertices of degree d
    bool any_violation = false;
};

ProofProfile criticality_profile(const Graph& g, int k);

}  // namespace gmw
