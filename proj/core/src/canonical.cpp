#include "gmw/canonical.hpp"

#include <algorithm>
#include <map>

namespace gmw {

namespace {

using Partition = std::vector<std::vector<int>>;  // ordered cells

// Equitable refinement: split cells by neighbor counts into every cell until
// stable. Sub-cells are ordered by ascending count vector, which is a
// relabeling-invariant rule.
void refine(const Graph& g, Partition& p) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t ci = 0; ci < p.size() && !changed; ++ci) {
            if (p[ci].size() <= 1) continue;
            std::map<std::vector<int>, std::vector<int>> buckets;
            for (int v : p[ci]) {
                std::vector<int> key;
                key.reserve(p.size());
                for (const auto& cell : p) {
                    int cnt = 0;
                    for (int w : cell) cnt += g.has_edge(v, w) ? 1 : 0;
                    key.push_back(cnt);
                }
                buckets[key].push_back(v);
            }
            if (buckets.size() > 1) {
                Partition np;
                np.reserve(p.size() + buckets.size());
                for (size_t cj = 0; cj < p.size(); ++cj) {
                    if (cj == ci)
                        for (auto& [k, cell] : buckets) np.push_back(cell);
                    else
                        np.push_back(p[cj]);
                }
                p = std::move(np);
                changed = true;
            }
        }
    }
}

struct Searcher {
    const Graph& g;
    const std::vector<int>& colors;
    std::vector<std::uint8_t> best_cert;
    std::vector<int> best_order;
    std::vector<std::vector<int>> gens;

    std::vector<std::uint8_t> leaf_cert(const std::vector<int>& order) const {
        int n = g.order();
        std::vector<std::uint8_t> cert;
        cert.push_back(static_cast<std::uint8_t>(n));
        for (int pos = 0; pos < n; ++pos)
            cert.push_back(static_cast<std::uint8_t>(
                colors.empty() ? 0 : colors[static_cast<size_t>(order[static_cast<size_t>(pos)])]));
        std::uint8_t acc = 0;
        int nb = 0;
        for (int col = 1; col < n; ++col) {
            for (int row = 0; row < col; ++row) {
                acc = static_cast<std::uint8_t>(
                    (acc << 1) |
                    (g.has_edge(order[static_cast<size_t>(row)], order[static_cast<size_t>(col)]) ? 1 : 0));
                if (++nb == 8) {
                    cert.push_back(acc);
                    acc = 0;
                    nb = 0;
                }
            }
        }
        if (nb) cert.push_back(static_cast<std::uint8_t>(acc << (8 - nb)));
        return cert;
    }

    void visit_leaf(const Partition& p) {
        std::vector<int> order;
        order.reserve(p.size());
        for (const auto& cell : p) order.push_back(cell[0]);
        auto cert = leaf_cert(order);
        if (best_cert.empty() || cert < best_cert) {
            best_cert = std::move(cert);
            best_order = std::move(order);
        } else if (cert == best_cert) {
            // Two labelings with the same certificate differ by an automorphism.
            std::vector<int> aut(static_cast<size_t>(g.order()));
            for (size_t pos = 0; pos < order.size(); ++pos)
                aut[static_cast<size_t>(best_order[pos])] = order[pos];
            bool identity = true;
            for (int v = 0; v < g.order(); ++v)
                if (aut[static_cast<size_t>(v)] != v) identity = false;
            if (!identity && gens.size() < 256) gens.push_back(std::move(aut));
        }
    }

    // Union-find orbits under the generators that fix every vertex in `fixed`.
    std::vector<int> stabilizer_orbits(const std::vector<int>& fixed) const {
        int n = g.order();
        std::vector<int> root(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v) root[static_cast<size_t>(v)] = v;
        auto find = [&](int v) {
            while (root[static_cast<size_t>(v)] != v) v = root[static_cast<size_t>(v)];
            return v;
        };
        for (const auto& aut : gens) {
            bool fixes = true;
            for (int f : fixed)
                if (aut[static_cast<size_t>(f)] != f) fixes = false;
            if (!fixes) continue;
            for (int v = 0; v < n; ++v) {
                int a = find(v), b = find(aut[static_cast<size_t>(v)]);
                if (a != b) root[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
            }
        }
        for (int v = 0; v < n; ++v) root[static_cast<size_t>(v)] = find(v);
        return root;
    }

    void search(Partition p, std::vector<int>& fixed) {
        refine(g, p);
        size_t target = p.size();
        for (size_t ci = 0; ci < p.size(); ++ci)
            if (p[ci].size() > 1) {
                target = ci;
                break;
            }
        if (target == p.size()) {
            visit_leaf(p);
            return;
        }
        std::vector<int> tried;
        for (int v : p[target]) {
            // Skip vertices equivalent to an already-tried one under the
            // automorphisms that fix the current individualization path.
            auto orbit = stabilizer_orbits(fixed);
            bool skip = false;
            for (int t : tried)
                if (orbit[static_cast<size_t>(t)] == orbit[static_cast<size_t>(v)]) skip = true;
            if (skip) continue;
            tried.push_back(v);
            Partition child;
            child.reserve(p.size() + 1);
            for (size_t cj = 0; cj < p.size(); ++cj) {
                if (cj == target) {
                    child.push_back({v});
                    std::vector<int> rest;
                    for (int w : p[cj])
                        if (w != v) rest.push_back(w);
                    child.push_back(std::move(rest));
                } else {
                    child.push_back(p[cj]);
                }
            }
            fixed.push_back(v);
            search(std::move(child), fixed);
            fixed.pop_back();
        }
    }
};

}  // namespace

CanonResult canonical_form(const Graph& g, const std::vector<int>& colors) {
    if (!colors.empty() && colors.size() != static_cast<size_t>(g.order()))
        throw std::invalid_argument("canonical_form: color vector length mismatch");
    int n = g.order();
    if (n == 0) return {{0}, {}, {}};

    Partition initial;
    if (colors.empty()) {
        initial.push_back({});
        for (int v = 0; v < n; ++v) initial[0].push_back(v);
    } else {
        std::map<int, std::vector<int>> by_color;
        for (int v = 0; v < n; ++v) by_color[colors[static_cast<size_t>(v)]].push_back(v);
        for (auto& [c, cell] : by_color) initial.push_back(std::move(cell));
    }

    Searcher s{g, colors, {}, {}, {}};
    std::vector<int> fixed;
    s.search(std::move(initial), fixed);
    return {std::move(s.best_cert), std::move(s.best_order), std::move(s.gens)};
}

std::vector<std::uint8_t> certificate(const Graph& g, const std::vector<int>& colors) {
    return canonical_form(g, colors).certificate;
}

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    return certificate(a) == certificate(b);
}

bool same_orbit(const Graph& g, int u, int v) {
    if (u == v) return true;
    std::vector<int> cu(static_cast<size_t>(g.order()), 0), cv(static_cast<size_t>(g.order()), 0);
    cu[static_cast<size_t>(u)] = 1;
    cv[static_cast<size_t>(v)] = 1;
    return certificate(g, cu) == certificate(g, cv);
}

}  // namespace gmw
