#include "gmw/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "gmw/graph6.hpp"
#include "gmw/named.hpp"

namespace gmw {

// ---- deletion-lemma replay -------------------------------------------------

std::optional<std::pair<int, int>> deletion_vertex(const Graph& g, int t) {
    std::vector<int> order(static_cast<size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) order[static_cast<size_t>(v)] = v;
    // Low-degree vertices contribute least to a dense minor, so try them
    // first; every y is searched exhaustively, so the order is only speed.
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) < g.degree(b); });
    for (int y : order) {
        Graph gy = minor_step(g, MinorStep::delete_vertex(y)).graph;
        if (auto found = has_kteq_minor(gy, t)) {
            if (!check_model(gy, found->first == 0 ? kt_doubleminus(t).first : kt_doubleminus(t).second,
                             found->second))
                throw std::logic_error("deletion_vertex: search produced an invalid model");
            return std::make_pair(y, found->first);
        }
    }
    return std::nullopt;
}

namespace {

struct UnitResult {
    long scanned = 0;
    long validated = 0;
    std::vector<std::string> counterexamples;
};

UnitResult scan_unit(const GenParams& params, const GenUnit& unit, int t) {
    UnitResult res;
    expand_unit(params, unit, [&](const Graph& g) {
        ++res.scanned;
        if (deletion_vertex(g, t))
            ++res.validated;
        else
            res.counterexamples.push_back(to_graph6(g));
        return true;
    });
    return res;
}

struct Checkpoint {
    long units_done = 0;
    long scanned = 0;
    long validated = 0;
    std::vector<std::string> counterexamples;
};

std::optional<Checkpoint> load_checkpoint(const std::string& path, int n, int d, int t) {
    std::ifstream in(path);
    if (!in) return std::nullopt;
    Checkpoint cp;
    std::string line;
    bool ok_header = false;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "gmw-checkpoint") {
            ok_header = true;
        } else if (tag == "params:") {
            int cn, cd, ct;
            ls >> cn >> cd >> ct;
            if (cn != n || cd != d || ct != t)
                throw std::invalid_argument("checkpoint parameters do not match this run");
        } else if (tag == "units-done:") {
            ls >> cp.units_done;
        } else if (tag == "scanned:") {
            ls >> cp.scanned;
        } else if (tag == "validated:") {
            ls >> cp.validated;
        } else if (tag == "counterexample:") {
            std::string g6;
            ls >> g6;
            cp.counterexamples.push_back(g6);
        }
    }
    if (!ok_header) throw std::invalid_argument("not a gmw checkpoint file: " + path);
    return cp;
}

void save_checkpoint(const std::string& path, int n, int d, int t, const Checkpoint& cp) {
    std::ofstream out(path + ".tmp", std::ios::trunc);
    out << "gmw-checkpoint 1\n";
    out << "params: " << n << ' ' << d << ' ' << t << '\n';
    out << "units-done: " << cp.units_done << '\n';
    out << "scanned: " << cp.scanned << '\n';
    out << "validated: " << cp.validated << '\n';
    for (const auto& g6 : cp.counterexamples) out << "counterexample: " << g6 << '\n';
    out.close();
    std::rename((path + ".tmp").c_str(), path.c_str());
}

}  // namespace

VerificationReport verify_deletion_lemma(int n, int d, int t, const VerifyOptions& opts) {
    auto started = std::chrono::steady_clock::now();
    GenParams params{n, d};
    auto units = generation_units(params, default_split_level(n));

    Checkpoint cp;
    if (!opts.checkpoint_path.empty()) {
        if (auto loaded = load_checkpoint(opts.checkpoint_path, n, d, t)) {
            cp = *loaded;
            if (opts.log)
                opts.log("resuming after " + std::to_string(cp.units_done) + " of " +
                         std::to_string(units.size()) + " units");
        }
    }

    long first = cp.units_done;
    long total = static_cast<long>(units.size());
    std::vector<std::optional<UnitResult>> results(units.size());
    std::atomic<long> next{first};
    int jobs = std::max(1, opts.jobs);

    auto worker = [&]() {
        while (true) {
            long i = next.fetch_add(1);
            if (i >= total) return;
            results[static_cast<size_t>(i)] = scan_unit(params, units[static_cast<size_t>(i)], t);
        }
    };

    if (jobs == 1) {
        // Inline, checkpointing after every unit.
        for (long i = first; i < total; ++i) {
            UnitResult r = scan_unit(params, units[static_cast<size_t>(i)], t);
            cp.units_done = i + 1;
            cp.scanned += r.scanned;
            cp.validated += r.validated;
            for (auto& cx : r.counterexamples) cp.counterexamples.push_back(cx);
            if (!opts.checkpoint_path.empty()) save_checkpoint(opts.checkpoint_path, n, d, t, cp);
            if (opts.log && (i % 16 == 15 || i + 1 == total))
                opts.log("unit " + std::to_string(i + 1) + "/" + std::to_string(total) +
                         ", scanned " + std::to_string(cp.scanned));
        }
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < jobs; ++w) pool.emplace_back(worker);
        // Merge in unit order as the prefix completes, so the final report is
        // independent of the worker schedule.
        long merged = first;
        while (merged < total) {
            if (results[static_cast<size_t>(merged)]) {
                UnitResult& r = *results[static_cast<size_t>(merged)];
                cp.units_done = merged + 1;
                cp.scanned += r.scanned;
                cp.validated += r.validated;
                for (auto& cx : r.counterexamples) cp.counterexamples.push_back(cx);
                results[static_cast<size_t>(merged)].reset();
                ++merged;
                if (!opts.checkpoint_path.empty()) save_checkpoint(opts.checkpoint_path, n, d, t, cp);
                if (opts.log && (merged % 16 == 0 || merged == total))
                    opts.log("unit " + std::to_string(merged) + "/" + std::to_string(total) +
                             ", scanned " + std::to_string(cp.scanned));
            } else {
                std::this_thread::sleep_for(std::chrono::milliseconds(20));
            }
        }
        for (auto& th : pool) th.join();
    }

    VerificationReport rep;
    rep.n = n;
    rep.min_degree = d;
    rep.t = t;
    rep.total_units = total;
    rep.units_done = cp.units_done;
    rep.graphs_scanned = cp.scanned;
    rep.certificates_validated = cp.validated;
    rep.counterexamples = cp.counterexamples;
    rep.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return rep;
}

std::string report_to_text(const VerificationReport& r) {
    std::ostringstream out;
    out << "gmw-report 1\n";
    out << "lemma: deletion\n";
    out << "params: n=" << r.n << " delta=" << r.min_degree << " t=" << r.t << '\n';
    out << "units: " << r.units_done << "/" << r.total_units << '\n';
    out << "graphs-scanned: " << r.graphs_scanned << '\n';
    out << "certificates-validated: " << r.certificates_validated << '\n';
    out << "counterexamples: " << r.counterexamples.size() << '\n';
    for (const auto& g6 : r.counterexamples) out << "counterexample: " << g6 << '\n';
    out << "verdict: "
        << (!r.complete() ? "incomplete" : r.counterexamples.empty() ? "lemma-holds" : "refuted")
        << '\n';
    out << "# timing: " << r.wall_seconds << "s wall\n";
    return out.str();
}

// ---- extremal dichotomy ----------------------------------------------------

ExtremalVerdict scan_extremal(const Graph& g) {
    if (g.order() < 8) throw std::invalid_argument("scan_extremal: need |G| >= 8");
    ExtremalVerdict v;
    if (g.edge_count() < 6 * g.order() - 20) {
        v.kind = ExtremalVerdict::Kind::HypothesisNotMet;
        return v;
    }
    if (auto m = has_k9eq_minor(g)) {
        v.kind = ExtremalVerdict::Kind::MinorBranch;
        v.variant = m->first;
        v.model = m->second;
        return v;
    }
    if (auto plan = recognize_cockade(g)) {
        v.kind = ExtremalVerdict::Kind::CockadeBranch;
        v.plan = std::move(plan);
        return v;
    }
    v.kind = ExtremalVerdict::Kind::DichotomyViolated;  // would refute the dichotomy
    return v;
}

// ---- two-K7 construction ---------------------------------------------------

namespace {

// Cut a fan path at its first vertex inside `stops` (after the hub).
std::vector<int> truncate_at(const std::vector<int>& path, std::uint64_t stops) {
    std::vector<int> out;
    for (size_t i = 0; i < path.size(); ++i) {
        out.push_back(path[i]);
        if (i > 0 && ((stops >> path[i]) & 1u)) break;
    }
    return out;
}

}  // namespace

TwoK7Result two_k7_to_k9eq(const Graph& g, std::uint64_t u1, std::uint64_t u2) {
    if (g.order() < 9) throw std::invalid_argument("two_k7_to_k9eq: need |G| >= 9");
    if (std::popcount(u1) != 7 || !is_clique(g, u1))
        throw std::invalid_argument("two_k7_to_k9eq: U1 does not induce K7");
    if (std::popcount(u2) != 7 || !is_clique(g, u2))
        throw std::invalid_argument("two_k7_to_k9eq: U2 does not induce K7");
    if (u1 == u2) throw std::invalid_argument("two_k7_to_k9eq: U1 and U2 must differ");
    if (vertex_connectivity(g).connectivity < 7)
        throw std::invalid_argument("two_k7_to_k9eq: host is not 7-connected");

    auto [variant_disjoint, variant_shared] = kt_doubleminus(9);
    std::uint64_t common = u1 & u2;
    std::uint64_t w_mask = u1 | u2;

    if (std::popcount(common) == 6) {
        // 7-path fan from an outside vertex onto the 8 vertices of U1 ∪ U2.
        int x = std::countr_zero(g.vertex_mask() & ~w_mask);
        auto fan = disjoint_paths(g, 1ull << x, w_mask, 7, DisjointnessMode::DisjointExceptCommonEnd);
        if (!fan.paths) throw std::logic_error("two_k7_to_k9eq: fan missing in 7-connected host");

        std::uint64_t hub_set = 1ull << x;
        std::uint64_t targets = 0;
        PathSystem kept;
        kept.mode = DisjointnessMode::DisjointExceptCommonEnd;
        for (const auto& p : fan.paths->paths) {
            auto tp = truncate_at(p, w_mask);
            targets |= (1ull << tp.back());
            for (size_t i = 0; i + 1 < tp.size(); ++i) hub_set |= (1ull << tp[i]);
            kept.paths.push_back(std::move(tp));
        }

        int a = std::countr_zero(u1 & ~u2);  // the pair that may be nonadjacent
        int b = std::countr_zero(u2 & ~u1);
        std::uint64_t missed_mask = w_mask & ~targets;
        int w = missed_mask ? std::countr_zero(missed_mask) : -1;

        // Possibly-missing edges: ab, and xw when some target was missed.
        // Align them with a K9^= variant (extra adjacencies are harmless).
        TwoK7Result res;
        res.paths = std::move(kept);
        res.model.branch_sets.assign(9, 0);
        std::vector<int> rest = mask_to_vector(w_mask & ~((1ull << a) | (1ull << b)));
        if (w < 0 || (w != a && w != b)) {
            // Disjoint variant: misses (0,1) and (2,3).
            res.variant = 0;
            res.model.branch_sets[0] = 1ull << a;
            res.model.branch_sets[1] = 1ull << b;
            res.model.branch_sets[2] = hub_set;  // x
            if (w >= 0) {
                res.model.branch_sets[3] = 1ull << w;
                rest.erase(std::find(rest.begin(), rest.end(), w));
            } else {
                res.model.branch_sets[3] = 1ull << rest.back();
                rest.pop_back();
            }
            for (int i = 0; i < 5; ++i) res.model.branch_sets[static_cast<size_t>(4 + i)] = 1ull << rest[static_cast<size_t>(i)];
            if (!check_model(g, variant_disjoint, res.model))
                throw std::logic_error("two_k7_to_k9eq: fan model failed validation");
        } else {
            // w coincides with a or b: both missing edges meet w; shared
            // variant misses (0,1) and (0,2).
            res.variant = 1;
            int other = (w == a) ? b : a;
            res.model.branch_sets[0] = 1ull << w;
            res.model.branch_sets[1] = 1ull << other;
            res.model.branch_sets[2] = hub_set;  // x
            int i = 3;
            for (int v : rest) res.model.branch_sets[static_cast<size_t>(i++)] = 1ull << v;
            if (!check_model(g, variant_shared, res.model))
                throw std::logic_error("two_k7_to_k9eq: fan model failed validation");
        }
        return res;
    }

    // |U1 ∩ U2| <= 5: seven disjoint U1-U2 paths; the shared vertices come
    // first as single-vertex paths, so the last two paths are genuine.
    auto dp = disjoint_paths(g, u1, u2, 7, DisjointnessMode::FullyDisjoint);
    if (!dp.paths) throw std::logic_error("two_k7_to_k9eq: paths missing in 7-connected host");
    const auto& paths = dp.paths->paths;

    TwoK7Result res;
    res.paths = *dp.paths;
    res.variant = 0;
    res.model.branch_sets.assign(9, 0);
    // Contract P1..P5 to single vertices...
    for (int i = 0; i < 5; ++i)
        res.model.branch_sets[static_cast<size_t>(4 + i)] = vector_to_mask(paths[static_cast<size_t>(i)]);
    // ...and P6, P7 each to a single edge (internals folded onto the U1 end).
    const auto& p6 = paths[5];
    const auto& p7 = paths[6];
    std::uint64_t a6 = vector_to_mask(p6) & ~(1ull << p6.back());
    std::uint64_t a7 = vector_to_mask(p7) & ~(1ull << p7.back());
    // Disjoint variant misses (0,1) and (2,3): (a6, b7) and (a7, b6).
    res.model.branch_sets[0] = a6;
    res.model.branch_sets[1] = 1ull << p7.back();
    res.model.branch_sets[2] = a7;
    res.model.branch_sets[3] = 1ull << p6.back();
    if (!check_model(g, variant_disjoint, res.model))
        throw std::logic_error("two_k7_to_k9eq: path model failed validation");
    return res;
}

// ---- Kempe-chain linkage search -------------------------------------------

namespace {

// Backtracking over the missing pairs in order; each pair gets a path whose
// internal vertices avoid N[x] and all internals chosen so far.
struct LinkSearch {
    const Graph& g;
    const std::vector<std::pair<int, int>>& missing;
    std::uint64_t region;  // vertices usable as internal path vertices
    std::vector<std::vector<int>> out;
    long budget = 5'000'000;

    bool rec(size_t mi, std::uint64_t used_internals) {
        if (mi == missing.size()) return true;
        auto [u, v] = missing[mi];
        std::vector<int> path{u};
        return extend(mi, v, 1ull << u, used_internals, path);
    }

    bool extend(size_t mi, int goal, std::uint64_t visited, std::uint64_t used,
                std::vector<int>& path) {
        if (--budget <= 0) return false;
        std::uint64_t nbrs = g.neighbors(path.back());
        if (((nbrs >> goal) & 1u) && path.size() >= 2) {  // uv itself is a nonedge
            path.push_back(goal);
            std::uint64_t internals = vector_to_mask(path) & region;
            out.push_back(path);
            if (rec(mi + 1, used | internals)) return true;
            out.pop_back();
            path.pop_back();
        }
        bool done = false;
        for_each_bit(nbrs & region & ~visited & ~used, [&](int w) {
            if (done || budget <= 0) return;
            path.push_back(w);
            if (extend(mi, goal, visited | (1ull << w), used, path)) {
                done = true;
                return;
            }
            path.pop_back();
        });
        return done;
    }
};

}  // namespace

std::optional<PathSystem> find_linkage(const LinkageRequest& req) {
    const Graph& g = req.graph;
    if (req.hub < 0 || req.hub >= g.order())
        throw std::invalid_argument("find_linkage: bad hub vertex");
    std::uint64_t nbhd = g.neighbors(req.hub);
    if (req.independent_set & ~nbhd)
        throw std::invalid_argument("find_linkage: S must lie inside N(x)");
    for_each_bit(req.independent_set, [&](int a) {
        if (g.neighbors(a) & req.independent_set)
            throw std::invalid_argument("find_linkage: S is not independent");
    });
    std::uint64_t allowed_ends = nbhd & ~req.independent_set;
    for (auto [u, v] : req.missing) {
        if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || u == v)
            throw std::invalid_argument("find_linkage: malformed missing pair");
        if (g.has_edge(u, v))
            throw std::invalid_argument("find_linkage: pair is already an edge");
        if (!((allowed_ends >> u) & 1u) || !((allowed_ends >> v) & 1u))
            throw std::invalid_argument("find_linkage: pair endpoints must lie in N(x) \\ S");
    }

    std::uint64_t region = g.vertex_mask() & ~g.closed_neighbors(req.hub);
    LinkSearch search{g, req.missing, region, {}, 5'000'000};
    if (!search.rec(0, 0)) return std::nullopt;
    PathSystem ps;
    ps.mode = DisjointnessMode::DisjointExceptSharedEndpoints;
    ps.paths = std::move(search.out);
    return ps;
}

}  // namespace gmw
