#include "gmw/graph.hpp"

#include <algorithm>

namespace gmw {

namespace {

// Rebuild a graph keeping only the vertices in `keep`, compacting indices.
RelabeledGraph compact(const Graph& g, std::uint64_t keep) {
    std::vector<int> old_to_new(static_cast<size_t>(g.order()), -1);
    int next = 0;
    for (int v = 0; v < g.order(); ++v)
        if ((keep >> v) & 1u) old_to_new[static_cast<size_t>(v)] = next++;
    Graph out(next);
    for (int u = 0; u < g.order(); ++u) {
        if (old_to_new[static_cast<size_t>(u)] < 0) continue;
        for_each_bit(g.neighbors(u) & keep, [&](int v) {
            if (v > u) out.add_edge(old_to_new[static_cast<size_t>(u)], old_to_new[static_cast<size_t>(v)]);
        });
    }
    return {std::move(out), std::move(old_to_new)};
}

}  // namespace

RelabeledGraph minor_step(const Graph& g, const MinorStep& step) {
    switch (step.kind) {
        case MinorStep::Kind::DeleteVertex: {
            if (step.u < 0 || step.u >= g.order())
                throw std::invalid_argument("minor_step: no such vertex");
            return compact(g, g.vertex_mask() & ~(1ull << step.u));
        }
        case MinorStep::Kind::DeleteEdge: {
            if (!g.has_edge(step.u, step.v))
                throw std::invalid_argument("minor_step: no such edge");
            Graph out = g;
            out.remove_edge(step.u, step.v);
            std::vector<int> id(static_cast<size_t>(g.order()));
            for (int v = 0; v < g.order(); ++v) id[static_cast<size_t>(v)] = v;
            return {std::move(out), std::move(id)};
        }
        case MinorStep::Kind::ContractEdge: {
            if (!g.has_edge(step.u, step.v))
                throw std::invalid_argument("minor_step: no such edge");
            int lo = std::min(step.u, step.v), hi = std::max(step.u, step.v);
            Graph merged = g;
            // Fold hi's neighbors into lo, then drop hi. Loops and parallel
            // edges disappear because adjacency is a set.
            for_each_bit(g.neighbors(hi) & ~(1ull << lo), [&](int w) { merged.add_edge(lo, w); });
            RelabeledGraph out = compact(merged, g.vertex_mask() & ~(1ull << hi));
            out.old_to_new[static_cast<size_t>(hi)] = out.old_to_new[static_cast<size_t>(lo)];
            return out;
        }
    }
    throw std::invalid_argument("minor_step: bad step kind");
}

Graph complement(const Graph& g) {
    Graph out(g.order());
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!g.has_edge(u, v)) out.add_edge(u, v);
    return out;
}

RelabeledGraph induced_subgraph(const Graph& g, std::uint64_t vertex_set) {
    if (vertex_set & ~g.vertex_mask())
        throw std::invalid_argument("induced_subgraph: vertex out of range");
    return compact(g, vertex_set);
}

namespace {

// Max independent set over `avail`, branching on a max-degree vertex.
void mis_rec(const Graph& g, std::uint64_t avail, std::uint64_t chosen, int& best,
             std::uint64_t& best_set) {
    int nav = std::popcount(avail);
    int cur = std::popcount(chosen);
    if (cur + nav <= best) return;
    if (!avail) {
        if (cur > best) {
            best = cur;
            best_set = chosen;
        }
        return;
    }
    // Vertices with no available neighbor always go in.
    std::uint64_t forced = 0;
    for_each_bit(avail, [&](int v) {
        if (!(g.neighbors(v) & avail)) forced |= (1ull << v);
    });
    if (forced) {
        mis_rec(g, avail & ~forced, chosen | forced, best, best_set);
        return;
    }
    int pick = -1, pick_deg = -1;
    for_each_bit(avail, [&](int v) {
        int d = std::popcount(g.neighbors(v) & avail);
        if (d > pick_deg) {
            pick_deg = d;
            pick = v;
        }
    });
    mis_rec(g, avail & ~(1ull << pick) & ~g.neighbors(pick), chosen | (1ull << pick), best, best_set);
    mis_rec(g, avail & ~(1ull << pick), chosen, best, best_set);
}

}  // namespace

std::pair<int, std::uint64_t> independence_number(const Graph& g) {
    int best = 0;
    std::uint64_t best_set = 0;
    mis_rec(g, g.vertex_mask(), 0, best, best_set);
    return {best, best_set};
}

std::pair<int, std::uint64_t> clique_number(const Graph& g) {
    return independence_number(complement(g));
}

std::uint64_t component_of(const Graph& g, int v, std::uint64_t allowed) {
    std::uint64_t comp = 1ull << v;
    std::uint64_t frontier = comp;
    while (frontier) {
        std::uint64_t next = 0;
        for_each_bit(frontier, [&](int u) { next |= g.neighbors(u) & allowed; });
        frontier = next & ~comp;
        comp |= frontier;
    }
    return comp;
}

bool is_connected(const Graph& g) {
    if (g.order() <= 1) return true;
    return component_of(g, 0, g.vertex_mask()) == g.vertex_mask();
}

bool is_clique(const Graph& g, std::uint64_t vertex_set) {
    bool ok = true;
    for_each_bit(vertex_set, [&](int v) {
        std::uint64_t others = vertex_set & ~(1ull << v);
        if ((g.neighbors(v) & others) != others) ok = false;
    });
    return ok;
}

}  // namespace gmw
