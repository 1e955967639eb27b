#pragma once

// Shared brute-force oracles for the test suite. Everything here is written
// naively on purpose — the point is structural independence from the library
// implementations under test.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "gmw/graph.hpp"

namespace gmwtest {

inline gmw::Graph random_graph(std::mt19937& rng, int n, double p) {
    gmw::Graph g(n);
    std::bernoulli_distribution edge(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (edge(rng)) g.add_edge(u, v);
    return g;
}

// Iterate all 2^(n(n-1)/2) labeled graphs on n vertices.
template <typename F>
void all_labeled_graphs(int n, F&& f) {
    int m = n * (n - 1) / 2;
    for (std::uint64_t bits = 0; bits < (1ull << m); ++bits) {
        gmw::Graph g(n);
        int k = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v, ++k)
                if ((bits >> k) & 1u) g.add_edge(u, v);
        f(g);
    }
}

inline bool brute_isomorphic(const gmw::Graph& a, const gmw::Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    std::vector<int> perm(static_cast<size_t>(a.order()));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int u = 0; u < a.order() && ok; ++u)
            for (int v = u + 1; v < a.order() && ok; ++v)
                if (a.has_edge(u, v) != b.has_edge(perm[static_cast<size_t>(u)], perm[static_cast<size_t>(v)]))
                    ok = false;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

namespace detail {
inline bool color_rec(const gmw::Graph& g, std::vector<int>& colors, int v, int k) {
    if (v == g.order()) return true;
    for (int c = 0; c < k; ++c) {
        bool ok = true;
        gmw::for_each_bit(g.neighbors(v) & ((1ull << v) - 1),
                          [&](int u) { ok = ok && colors[static_cast<size_t>(u)] != c; });
        if (!ok) continue;
        colors[static_cast<size_t>(v)] = c;
        if (color_rec(g, colors, v + 1, k)) return true;
    }
    return false;
}
}  // namespace detail

inline int brute_chromatic(const gmw::Graph& g) {
    if (g.order() == 0) return 0;
    for (int k = 1; k <= g.order(); ++k) {
        std::vector<int> colors(static_cast<size_t>(g.order()), -1);
        if (detail::color_rec(g, colors, 0, k)) return k;
    }
    return g.order();
}

// Is g minus the vertex set `removed` disconnected (at least two components
// among the >= 2 surviving vertices)?
inline bool disconnects(const gmw::Graph& g, std::uint64_t removed) {
    std::uint64_t rest = g.vertex_mask() & ~removed;
    if (std::popcount(rest) < 2) return false;
    int start = std::countr_zero(rest);
    std::uint64_t seen = 1ull << start, frontier = seen;
    while (frontier) {
        std::uint64_t next = 0;
        gmw::for_each_bit(frontier, [&](int v) { next |= g.neighbors(v); });
        next &= rest & ~seen;
        seen |= next;
        frontier = next;
    }
    return seen != rest;
}

inline int brute_connectivity(const gmw::Graph& g) {
    int n = g.order();
    for (int k = 0; k < n - 1; ++k) {
        // every k-subset
        for (std::uint64_t s = 0; s < (1ull << n); ++s) {
            if (std::popcount(s) != k) continue;
            if (disconnects(g, s)) return k;
        }
    }
    return n - 1;
}

}  // namespace gmwtest
