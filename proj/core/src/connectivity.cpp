#include "gmw/connectivity.hpp"

#include <algorithm>
#include <queue>

namespace gmw {

namespace {

constexpr int kInf = 1 << 20;

struct MaxFlow {
    struct Edge {
        int to, cap, flow, rev;
    };
    std::vector<std::vector<Edge>> adj;

    explicit MaxFlow(int nodes) : adj(static_cast<size_t>(nodes)) {}

    void add_edge(int u, int v, int cap) {
        adj[static_cast<size_t>(u)].push_back({v, cap, 0, static_cast<int>(adj[static_cast<size_t>(v)].size())});
        adj[static_cast<size_t>(v)].push_back({u, 0, 0, static_cast<int>(adj[static_cast<size_t>(u)].size()) - 1});
    }

    // Edmonds-Karp; fine at this scale. Stops once `limit` units are routed.
    int run(int s, int t, int limit = kInf) {
        int total = 0;
        while (total < limit) {
            std::vector<std::pair<int, int>> parent(adj.size(), {-1, -1});
            std::queue<int> q;
            q.push(s);
            parent[static_cast<size_t>(s)] = {s, -1};
            while (!q.empty() && parent[static_cast<size_t>(t)].first < 0) {
                int u = q.front();
                q.pop();
                for (size_t i = 0; i < adj[static_cast<size_t>(u)].size(); ++i) {
                    const Edge& e = adj[static_cast<size_t>(u)][i];
                    if (e.cap - e.flow > 0 && parent[static_cast<size_t>(e.to)].first < 0) {
                        parent[static_cast<size_t>(e.to)] = {u, static_cast<int>(i)};
                        q.push(e.to);
                    }
                }
            }
            if (parent[static_cast<size_t>(t)].first < 0) break;
            for (int v = t; v != s;) {
                auto [u, i] = parent[static_cast<size_t>(v)];
                Edge& e = adj[static_cast<size_t>(u)][static_cast<size_t>(i)];
                e.flow += 1;
                adj[static_cast<size_t>(e.to)][static_cast<size_t>(e.rev)].flow -= 1;
                v = u;
            }
            total += 1;
        }
        return total;
    }

    // Nodes reachable from s in the residual network.
    std::vector<bool> residual_reachable(int s) const {
        std::vector<bool> seen(adj.size(), false);
        std::queue<int> q;
        q.push(s);
        seen[static_cast<size_t>(s)] = true;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (const Edge& e : adj[static_cast<size_t>(u)]) {
                if (e.cap - e.flow > 0 && !seen[static_cast<size_t>(e.to)]) {
                    seen[static_cast<size_t>(e.to)] = true;
                    q.push(e.to);
                }
            }
        }
        return seen;
    }
};

// Node ids in the vertex-split digraph.
inline int in_node(int v) { return 2 * v; }
inline int out_node(int v) { return 2 * v + 1; }

}  // namespace

bool validate_path_system(const Graph& g, const PathSystem& ps, int hub) {
    for (const auto& p : ps.paths) {
        if (p.empty()) return false;
        for (size_t i = 0; i + 1 < p.size(); ++i)
            if (!g.has_edge(p[i], p[i + 1])) return false;
        std::uint64_t seen = 0;
        for (int v : p) {
            if ((seen >> v) & 1u) return false;  // paths are simple
            seen |= (1ull << v);
        }
    }
    for (size_t i = 0; i < ps.paths.size(); ++i) {
        for (size_t j = i + 1; j < ps.paths.size(); ++j) {
            std::uint64_t shared = vector_to_mask(ps.paths[i]) & vector_to_mask(ps.paths[j]);
            switch (ps.mode) {
                case DisjointnessMode::FullyDisjoint:
                    if (shared) return false;
                    break;
                case DisjointnessMode::DisjointExceptCommonEnd:
                    if (hub < 0) return false;
                    if (shared & ~(1ull << hub)) return false;
                    break;
                case DisjointnessMode::DisjointExceptSharedEndpoints: {
                    std::uint64_t ends_i = (1ull << ps.paths[i].front()) | (1ull << ps.paths[i].back());
                    std::uint64_t ends_j = (1ull << ps.paths[j].front()) | (1ull << ps.paths[j].back());
                    if (shared & ~(ends_i & ends_j)) return false;
                    break;
                }
            }
        }
    }
    return true;
}

ConnectivityResult vertex_connectivity(const Graph& g) {
    int n = g.order();
    if (n < 2) throw std::invalid_argument("vertex_connectivity: need |G| >= 2");
    if (!is_connected(g)) {
        return {0, {}};
    }
    bool complete = g.edge_count() == n * (n - 1) / 2;
    if (complete) return {n - 1, {}};

    int best = n;  // any separator has < n vertices here
    std::vector<int> best_sep;
    for (int s = 0; s < n; ++s) {
        for (int t = s + 1; t < n; ++t) {
            if (g.has_edge(s, t)) continue;
            MaxFlow mf(2 * n);
            for (int v = 0; v < n; ++v)
                mf.add_edge(in_node(v), out_node(v), (v == s || v == t) ? kInf : 1);
            for (int u = 0; u < n; ++u)
                for_each_bit(g.neighbors(u), [&](int v) { mf.add_edge(out_node(u), in_node(v), kInf); });
            int flow = mf.run(out_node(s), in_node(t));
            if (flow < best) {
                best = flow;
                auto reach = mf.residual_reachable(out_node(s));
                best_sep.clear();
                for (int v = 0; v < n; ++v)
                    if (reach[static_cast<size_t>(in_node(v))] && !reach[static_cast<size_t>(out_node(v))])
                        best_sep.push_back(v);
            }
        }
    }
    return {best, best_sep};
}

DisjointPathsResult disjoint_paths(const Graph& g, std::uint64_t a, std::uint64_t b, int k,
                                   DisjointnessMode mode) {
    int n = g.order();
    if ((a | b) & ~g.vertex_mask())
        throw std::invalid_argument("disjoint_paths: terminal outside graph");
    if (k < 0) throw std::invalid_argument("disjoint_paths: negative k");

    if (mode == DisjointnessMode::DisjointExceptSharedEndpoints)
        throw std::invalid_argument("disjoint_paths: linkage mode is handled by find_linkage");

    PathSystem ps;
    ps.mode = mode;

    if (mode == DisjointnessMode::DisjointExceptCommonEnd) {
        if (std::popcount(a) != 1)
            throw std::invalid_argument("disjoint_paths: fan mode needs a single hub");
        int hub = std::countr_zero(a);
        std::uint64_t targets = b & ~a;
        MaxFlow mf(2 * n + 2);
        int src = 2 * n, snk = 2 * n + 1;
        mf.add_edge(src, out_node(hub), k);
        for (int v = 0; v < n; ++v)
            if (v != hub) mf.add_edge(in_node(v), out_node(v), 1);
        for (int u = 0; u < n; ++u)
            for_each_bit(g.neighbors(u), [&](int v) { mf.add_edge(out_node(u), in_node(v), kInf); });
        for_each_bit(targets, [&](int t) { mf.add_edge(out_node(t), snk, 1); });
        int flow = mf.run(src, snk);
        if (flow < k) {
            auto reach = mf.residual_reachable(src);
            DisjointPathsResult res;
            for (int v = 0; v < n; ++v) {
                if (v == hub) continue;
                if (reach[static_cast<size_t>(in_node(v))] && !reach[static_cast<size_t>(out_node(v))])
                    res.separator.push_back(v);
                else if (((targets >> v) & 1u) && reach[static_cast<size_t>(out_node(v))])
                    res.separator.push_back(v);  // saturated target arc
            }
            return res;
        }
        // Walk k paths out of the hub, lowest-index continuation first.
        for (int p = 0; p < k; ++p) {
            std::vector<int> path{hub};
            int cur = out_node(hub);
            while (cur != snk) {
                auto& edges = mf.adj[static_cast<size_t>(cur)];
                size_t pick = edges.size();
                for (size_t i = 0; i < edges.size(); ++i) {
                    if (edges[i].flow > 0 && (pick == edges.size() || edges[i].to < edges[pick].to)) pick = i;
                }
                edges[pick].flow -= 1;
                cur = edges[pick].to;
                if (cur != snk && cur % 2 == 0) path.push_back(cur / 2);
            }
            ps.paths.push_back(std::move(path));
        }
        return {ps, {}};
    }

    // Fully disjoint mode. A single-vertex terminal set behaves like the
    // two-vertex Menger theorem: all paths may share that one endpoint (the
    // result is then flagged DisjointExceptSharedEndpoints). Multi-vertex
    // sides cap k, since each of their vertices carries at most one path.
    bool a_single = std::popcount(a) == 1, b_single = std::popcount(b) == 1;
    if ((!a_single && k > std::popcount(a)) || (!b_single && k > std::popcount(b)) ||
        (a_single && a == b && k > 1))
        throw std::invalid_argument("disjoint_paths: k exceeds min(|A|,|B|)");
    int sa = a_single ? std::countr_zero(a) : -1;
    int tb = b_single ? std::countr_zero(b) : -1;
    if (a_single || b_single) ps.mode = DisjointnessMode::DisjointExceptSharedEndpoints;

    std::uint64_t used = 0;
    std::uint64_t common = a & b;
    for_each_bit(common, [&](int v) {
        if (static_cast<int>(ps.paths.size()) >= k) return;
        ps.paths.push_back({v});
        // A shareable singleton terminal still carries the remaining paths.
        if (v != sa && v != tb) used |= (1ull << v);
    });
    int need = k - static_cast<int>(ps.paths.size());
    if (need == 0) return {ps, {}};

    std::uint64_t a2 = a & ~used & ~((tb >= 0 && tb != sa) ? (1ull << tb) : 0);
    std::uint64_t b2 = b & ~used & ~((sa >= 0 && sa != tb) ? (1ull << sa) : 0);
    MaxFlow mf(2 * n + 2);
    int src = 2 * n, snk = 2 * n + 1;
    for (int v = 0; v < n; ++v) {
        int cap = ((used >> v) & 1u) ? 0 : 1;
        if (v == sa || v == tb) cap = kInf;
        mf.add_edge(in_node(v), out_node(v), cap);
    }
    for (int u = 0; u < n; ++u)
        for_each_bit(g.neighbors(u), [&](int v) { mf.add_edge(out_node(u), in_node(v), kInf); });
    if (a_single)
        mf.add_edge(src, in_node(sa), need);
    else
        for_each_bit(a2, [&](int v) { mf.add_edge(src, in_node(v), 1); });
    if (b_single)
        mf.add_edge(out_node(tb), snk, need);
    else
        for_each_bit(b2, [&](int v) { mf.add_edge(out_node(v), snk, 1); });
    int flow = mf.run(src, snk, need);
    if (flow < need) {
        DisjointPathsResult res;
        res.separator = mask_to_vector(used);  // the consumed common vertices separate too
        auto reach = mf.residual_reachable(src);
        for (int v = 0; v < n; ++v) {
            if (((used >> v) & 1u) || v == sa || v == tb) continue;
            if (reach[static_cast<size_t>(in_node(v))] && !reach[static_cast<size_t>(out_node(v))])
                res.separator.push_back(v);
            else if (!a_single && ((a2 >> v) & 1u) && !reach[static_cast<size_t>(in_node(v))])
                res.separator.push_back(v);
            else if (!b_single && ((b2 >> v) & 1u) && reach[static_cast<size_t>(out_node(v))])
                res.separator.push_back(v);
        }
        std::sort(res.separator.begin(), res.separator.end());
        res.separator.erase(std::unique(res.separator.begin(), res.separator.end()),
                            res.separator.end());
        return res;
    }
    // Walk the `need` units of flow out of the source; at each step prefer
    // the sink, then the lowest unvisited vertex, so paths are simple and the
    // output is deterministic.
    for (int unit = 0; unit < need; ++unit) {
        std::vector<int> path;
        std::uint64_t on_path = 0;
        int cur = src;
        while (cur != snk) {
            auto& edges = mf.adj[static_cast<size_t>(cur)];
            size_t pick = edges.size();
            for (size_t i = 0; i < edges.size(); ++i) {
                if (edges[i].flow <= 0) continue;
                if (edges[i].to == snk) {
                    pick = i;
                    break;
                }
                bool revisit = ((on_path >> (edges[i].to / 2)) & 1u) != 0;
                if (revisit) continue;
                if (pick == edges.size() || edges[i].to < edges[pick].to) pick = i;
            }
            if (pick == edges.size())  // only revisits carry flow; take one anyway
                for (size_t i = 0; i < edges.size() && pick == edges.size(); ++i)
                    if (edges[i].flow > 0) pick = i;
            edges[pick].flow -= 1;
            cur = edges[pick].to;
            if (cur != snk && cur % 2 == 0) {
                path.push_back(cur / 2);
                on_path |= (1ull << (cur / 2));
            }
        }
        ps.paths.push_back(std::move(path));
    }
    return {ps, {}};
}

}  // namespace gmw
