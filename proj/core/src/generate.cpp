#include "gmw/generate.hpp"

#include <algorithm>
#include <set>

#include "gmw/canonical.hpp"

namespace gmw {

namespace {

struct Domain {
    int n;
    int max_deg;       // degree bound in the working domain
    bool complemented; // output = complement(working graph)
    int min_degree;    // final filter (only when not complemented)
};

Domain domain_for(const GenParams& p) {
    if (p.n < 1 || p.n > 16) throw std::invalid_argument("generate: order guard is 1..16");
    if (p.min_degree < 0 || p.min_degree >= std::max(1, p.n))
        throw std::invalid_argument("generate: min_degree out of range");
    if (p.min_degree > (p.n - 1) / 2)
        return {p.n, p.n - 1 - p.min_degree, true, 0};
    return {p.n, p.n - 1, false, p.min_degree};
}

Graph add_vertex(const Graph& g, std::uint64_t nbrs) {
    Graph out(g.order() + 1);
    for (int u = 0; u < g.order(); ++u)
        for_each_bit(g.neighbors(u), [&](int v) {
            if (v > u) out.add_edge(u, v);
        });
    for_each_bit(nbrs, [&](int v) { out.add_edge(g.order(), v); });
    return out;
}

// Is the newly added vertex `u` equivalent to the canonical deletion vertex?
bool is_canonical_child(const Graph& child, int u, const CanonResult& canon) {
    int z = canon.canonical_order.back();
    if (u == z) return true;
    // Fast path: discovered automorphisms.
    std::vector<int> orbit(static_cast<size_t>(child.order()));
    for (size_t v = 0; v < orbit.size(); ++v) orbit[v] = static_cast<int>(v);
    auto find = [&](int v) {
        while (orbit[static_cast<size_t>(v)] != v) v = orbit[static_cast<size_t>(v)];
        return v;
    };
    for (const auto& aut : canon.automorphisms)
        for (int v = 0; v < child.order(); ++v) {
            int a = find(v), b = find(aut[static_cast<size_t>(v)]);
            if (a != b) orbit[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
        }
    if (find(u) == find(z)) return true;
    // Exact fallback: colored certificates with one vertex marked.
    return same_orbit(child, u, z);
}

// DFS over the augmentation tree. `level_cap` stops at intermediate levels
// (used to cut the tree into units); returns false if the sink aborted.
bool augment(const Graph& g, int n, int max_deg, int level_cap,
             const std::function<bool(const Graph&)>& sink) {
    if (g.order() == level_cap) return sink(g);

    CanonResult parent_canon = canonical_form(g);
    std::uint64_t eligible = 0;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) < max_deg) eligible |= (1ull << v);

    // Orbit dedup of extension sets under the parent's automorphisms (sound
    // fast path; exact dedup happens on child certificates below).
    std::set<std::uint64_t> seen_sets;
    std::set<std::vector<std::uint8_t>> child_certs;

    std::uint64_t s = 0;
    while (true) {
        if (std::popcount(s) <= max_deg && !seen_sets.count(s)) {
            // Mark the whole orbit of s under the discovered generators.
            std::vector<std::uint64_t> stack{s};
            seen_sets.insert(s);
            while (!stack.empty()) {
                std::uint64_t cur = stack.back();
                stack.pop_back();
                for (const auto& aut : parent_canon.automorphisms) {
                    std::uint64_t img = 0;
                    for_each_bit(cur, [&](int v) { img |= (1ull << aut[static_cast<size_t>(v)]); });
                    if (seen_sets.insert(img).second) stack.push_back(img);
                }
            }
            Graph child = add_vertex(g, s);
            CanonResult cc = canonical_form(child);
            if (is_canonical_child(child, g.order(), cc) && child_certs.insert(cc.certificate).second) {
                if (!augment(child, n, max_deg, level_cap, sink)) return false;
            }
        }
        if (s == eligible) break;
        s = (s - eligible) & eligible;
    }
    return true;
}

bool emit(const Domain& d, const Graph& working, const std::function<bool(const Graph&)>& sink) {
    if (d.complemented) return sink(complement(working));
    if (working.min_degree() < d.min_degree) return true;
    return sink(working);
}

}  // namespace

void enumerate_max_degree(int n, int max_deg, const std::function<bool(const Graph&)>& sink) {
    if (n < 1 || n > 16) throw std::invalid_argument("enumerate_max_degree: order guard is 1..16");
    augment(Graph(1), n, max_deg, n, sink);
}

void generate(const GenParams& params, const std::function<bool(const Graph&)>& sink) {
    Domain d = domain_for(params);
    augment(Graph(1), d.n, d.max_deg, d.n,
            [&](const Graph& working) { return emit(d, working, sink); });
}

long generate_count(const GenParams& params) {
    long count = 0;
    generate(params, [&](const Graph&) {
        ++count;
        return true;
    });
    return count;
}

int default_split_level(int n) { return std::max(1, n - 3); }

std::vector<GenUnit> generation_units(const GenParams& params, int split_level) {
    Domain d = domain_for(params);
    int cap = std::clamp(split_level, 1, d.n);
    std::vector<GenUnit> units;
    augment(Graph(1), d.n, d.max_deg, cap, [&](const Graph& g) {
        units.push_back({g, static_cast<long>(units.size())});
        return true;
    });
    return units;
}

void expand_unit(const GenParams& params, const GenUnit& unit,
                 const std::function<bool(const Graph&)>& sink) {
    Domain d = domain_for(params);
    augment(unit.root, d.n, d.max_deg, d.n,
            [&](const Graph& working) { return emit(d, working, sink); });
}

}  // namespace gmw
