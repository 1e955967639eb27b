#include "gmw/coloring.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "gmw/canonical.hpp"

namespace gmw {

bool is_proper(const Graph& g, const Coloring& c) {
    if (c.colors.size() != static_cast<size_t>(g.order()))
        throw std::invalid_argument("is_proper: color array length mismatch");
    for (int u = 0; u < g.order(); ++u) {
        bool bad = false;
        for_each_bit(g.neighbors(u), [&](int v) {
            if (v > u && c.colors[static_cast<size_t>(u)] == c.colors[static_cast<size_t>(v)]) bad = true;
        });
        if (bad) return false;
    }
    return true;
}

namespace {

struct ColorSearch {
    const Graph& g;
    int best;                       // best palette size found so far
    std::vector<int> best_colors;
    std::vector<int> colors;        // -1 = uncolored

    // DSATUR: color the uncolored vertex with the most distinct neighbor
    // colors; ties by degree, then index.
    int pick() const {
        int pick = -1, psat = -1, pdeg = -1;
        for (int v = 0; v < g.order(); ++v) {
            if (colors[static_cast<size_t>(v)] >= 0) continue;
            std::uint64_t seen = 0;
            for_each_bit(g.neighbors(v), [&](int w) {
                if (colors[static_cast<size_t>(w)] >= 0) seen |= (1ull << colors[static_cast<size_t>(w)]);
            });
            int sat = std::popcount(seen);
            if (sat > psat || (sat == psat && g.degree(v) > pdeg)) {
                pick = v;
                psat = sat;
                pdeg = g.degree(v);
            }
        }
        return pick;
    }

    void rec(int colored, int used) {
        if (used >= best) return;
        if (colored == g.order()) {
            best = used;
            best_colors = colors;
            return;
        }
        int v = pick();
        std::uint64_t neighbor_colors = 0;
        for_each_bit(g.neighbors(v), [&](int w) {
            if (colors[static_cast<size_t>(w)] >= 0) neighbor_colors |= (1ull << colors[static_cast<size_t>(w)]);
        });
        int limit = std::min(used + 1, best - 1);
        for (int c = 0; c < limit; ++c) {
            if ((neighbor_colors >> c) & 1u) continue;
            colors[static_cast<size_t>(v)] = c;
            rec(colored + 1, std::max(used, c + 1));
            colors[static_cast<size_t>(v)] = -1;
        }
    }
};

}  // namespace

std::pair<int, Coloring> chromatic_number(const Graph& g) {
    if (g.order() > 32) throw std::invalid_argument("chromatic_number: guard of 32 vertices exceeded");
    if (g.order() == 0) return {0, Coloring{{}, 0}};

    ColorSearch s{g, g.order() + 1, {}, std::vector<int>(static_cast<size_t>(g.order()), -1)};
    // Seed with a maximum clique: forced distinct colors, and a lower bound.
    auto [omega, clique] = clique_number(g);
    int c = 0;
    for_each_bit(clique, [&](int v) { s.colors[static_cast<size_t>(v)] = c++; });
    s.rec(omega, omega);

    Coloring out{std::move(s.best_colors), s.best};
    return {s.best, std::move(out)};
}

std::uint64_t kempe_component(const Graph& g, const Coloring& c, int v, int a, int b) {
    if (c.colors.size() != static_cast<size_t>(g.order()))
        throw std::invalid_argument("kempe_component: color array length mismatch");
    if (v < 0 || v >= g.order()) throw std::invalid_argument("kempe_component: no such vertex");
    int cv = c.colors[static_cast<size_t>(v)];
    if (cv != a && cv != b)
        throw std::invalid_argument("kempe_component: vertex not colored a or b");
    std::uint64_t cls = 0;
    for (int u = 0; u < g.order(); ++u)
        if (c.colors[static_cast<size_t>(u)] == a || c.colors[static_cast<size_t>(u)] == b)
            cls |= (1ull << u);
    return component_of(g, v, cls);
}

Coloring kempe_swap(const Graph& g, const Coloring& c, std::uint64_t component, int a, int b) {
    // The component must be closed under (a,b)-adjacency, otherwise the swap
    // could create a monochromatic edge.
    bool closed = true;
    for_each_bit(component, [&](int v) {
        int cv = c.colors[static_cast<size_t>(v)];
        if (cv != a && cv != b) closed = false;
        for_each_bit(g.neighbors(v) & ~component, [&](int w) {
            int cw = c.colors[static_cast<size_t>(w)];
            if (cw == a || cw == b) closed = false;
        });
    });
    if (!closed) throw std::invalid_argument("kempe_swap: component not closed under (a,b)-adjacency");
    Coloring out = c;
    for_each_bit(component, [&](int v) {
        int& cv = out.colors[static_cast<size_t>(v)];
        cv = (cv == a) ? b : a;
    });
    return out;
}

namespace {

int chi_of(const Graph& g) { return chromatic_number(g).first; }

}  // namespace

bool is_contraction_critical(const Graph& g, int k) {
    if (g.order() > 8) throw std::invalid_argument("is_contraction_critical: guard of 8 vertices exceeded");
    if (chi_of(g) != k) return false;

    // Walk the whole proper-minor lattice; single-step checking is not
    // enough because (k-1)-colorability is not monotone under contraction.
    std::set<std::vector<std::uint8_t>> seen;
    std::deque<Graph> queue;
    queue.push_back(g);
    seen.insert(certificate(g));
    while (!queue.empty()) {
        Graph cur = queue.front();
        queue.pop_front();
        std::vector<MinorStep> steps;
        for (int v = 0; v < cur.order(); ++v) steps.push_back(MinorStep::delete_vertex(v));
        for (int u = 0; u < cur.order(); ++u)
            for_each_bit(cur.neighbors(u), [&](int v) {
                if (v > u) {
                    steps.push_back(MinorStep::delete_edge(u, v));
                    steps.push_back(MinorStep::contract_edge(u, v));
                }
            });
        for (const auto& st : steps) {
            Graph next = minor_step(cur, st).graph;
            if (next.order() == 0) continue;
            auto cert = certificate(next);
            if (!seen.insert(cert).second) continue;
            if (chi_of(next) > k - 1) return false;
            queue.push_back(next);
        }
    }
    return true;
}

ProofProfile criticality_profile(const Graph& g, int k) {
    ProofProfile p;
    p.k = k;
    p.order = g.order();
    p.edges = g.edge_count();
    p.min_degree = g.min_degree();
    p.extremal_bound = 6 * g.order() - 20;
    p.meets_extremal = p.edges <= p.extremal_bound;
    p.degree_counts.assign(static_cast<size_t>(g.order()), 0);
    for (int v = 0; v < g.order(); ++v) p.degree_counts[static_cast<size_t>(g.degree(v))]++;
    // Degree sum: if every vertex had degree > delta we would need more edges
    // than we have, so at least (delta+1)n - 2e vertices have degree exactly
    // delta. With delta = 11 and e <= 6n - 20 this forces >= 40 of them.
    p.forced_min_degree_count = std::max(0, (p.min_degree + 1) * p.order - 2 * p.edges);

    for (int x = 0; x < g.order(); ++x) {
        auto nb = induced_subgraph(g, g.neighbors(x));
        int alpha = independence_number(nb.graph).first;
        VertexCriticality rec;
        rec.vertex = x;
        rec.degree = g.degree(x);
        rec.alpha_neighborhood = alpha;
        rec.alpha_bound = rec.degree - k + 2;
        rec.degree_ok = rec.degree >= k - 1;
        rec.alpha_ok = alpha <= rec.alpha_bound;
        if (!rec.degree_ok || !rec.alpha_ok) p.any_violation = true;
        p.per_vertex.push_back(rec);
    }
    return p;
}

}  // namespace gmw
