#pragma once

#include <cstdint>
#include <vector>

#include "gmw/graph.hpp"

namespace gmw {

// Relabeling-invariant certificate of a (vertex-colored) graph's isomorphism
// class, plus the labeling that achieves it and the automorphisms discovered
// along the way.
struct CanonResult {
    std::vector<std::uint8_t> certificate;
    // canonical_order[pos] = original vertex placed at canonical position pos.
    std::vector<int> canonical_order;
    // Automorphism generators found during the search (permutations of
    // original vertex indices). They need not generate the full group.
    std::vector<std::vector<int>> automorphisms;
};

// Compute the canonical form. `colors`, when nonempty, is a per-vertex color
// that any relabeling must respect (smaller colors come first).
CanonResult canonical_form(const Graph& g, const std::vector<int>& colors = {});

// Just the certificate.
std::vector<std::uint8_t> certificate(const Graph& g, const std::vector<int>& colors = {});

bool isomorphic(const Graph& a, const Graph& b);

// True iff some automorphism of g maps u to v (decided exactly, via colored
// certificates with one vertex marked).
bool same_orbit(const Graph& g, int u, int v);

}  // namespace gmw
