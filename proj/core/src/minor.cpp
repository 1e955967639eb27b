#include "gmw/minor.hpp"

#include <algorithm>

#include "gmw/named.hpp"

namespace gmw {

namespace {

// All connected induced subsets of `avail` with at most `max_size` vertices.
// Each subset is produced exactly once (rooted at its lowest vertex).
void connected_subsets(const Graph& g, std::uint64_t avail, int max_size,
                       std::vector<std::uint64_t>& out) {
    struct Frame {
        std::uint64_t cur, ext, banned;
    };
    for_each_bit(avail, [&](int s) {
        std::uint64_t below = (1ull << s) - 1;
        std::vector<Frame> stack;
        stack.push_back({1ull << s, g.neighbors(s) & avail & ~below, below});
        while (!stack.empty()) {
            Frame f = stack.back();
            stack.pop_back();
            out.push_back(f.cur);
            if (std::popcount(f.cur) >= max_size) continue;
            std::uint64_t ext = f.ext;
            std::uint64_t banned = f.banned;
            while (ext) {
                int v = std::countr_zero(ext);
                ext &= ext - 1;
                std::uint64_t ncur = f.cur | (1ull << v);
                std::uint64_t next_ext = (ext | (g.neighbors(v) & avail)) & ~ncur & ~banned;
                stack.push_back({ncur, next_ext, banned});
                banned |= (1ull << v);  // later branches must not re-add v
            }
        }
    });
}

struct MinorSearch {
    const Graph& g;
    const Graph& h;
    std::vector<int> h_order;                 // H-vertices, descending degree
    std::vector<std::uint64_t> assigned;      // branch set per h_order position
    std::uint64_t used = 0;

    bool rec(size_t i) {
        if (i == h_order.size()) return true;
        std::uint64_t avail = g.vertex_mask() & ~used;
        int remaining_after = static_cast<int>(h_order.size() - i) - 1;
        if (std::popcount(avail) < remaining_after + 1) return false;
        int hv = h_order[i];

        std::vector<std::uint64_t> cands;
        connected_subsets(g, avail, std::popcount(avail) - remaining_after, cands);
        // Small sets first; among equal sizes prefer high-degree anchors.
        std::sort(cands.begin(), cands.end(), [&](std::uint64_t a, std::uint64_t b) {
            int pa = std::popcount(a), pb = std::popcount(b);
            if (pa != pb) return pa < pb;
            int da = anchor_degree(a), db = anchor_degree(b);
            if (da != db) return da > db;
            return a < b;
        });

        for (std::uint64_t s : cands) {
            bool ok = true;
            for (size_t j = 0; j < i && ok; ++j) {
                if (!h.has_edge(hv, h_order[j])) continue;
                if (!touches(s, assigned[j])) ok = false;
            }
            if (!ok) continue;
            assigned[i] = s;
            used |= s;
            if (rec(i + 1)) return true;
            used &= ~s;
        }
        return false;
    }

    int anchor_degree(std::uint64_t s) const {
        int best = -1;
        for_each_bit(s, [&](int v) { best = std::max(best, g.degree(v)); });
        return best;
    }

    bool touches(std::uint64_t a, std::uint64_t b) const {
        bool hit = false;
        for_each_bit(a, [&](int v) {
            if (g.neighbors(v) & b) hit = true;
        });
        return hit;
    }
};

}  // namespace

std::optional<BranchModel> has_minor(const Graph& g, const Graph& h) {
    if (h.order() < 1) throw std::invalid_argument("has_minor: need |H| >= 1");
    if (g.order() < h.order() || g.edge_count() < h.edge_count()) return std::nullopt;

    MinorSearch search{g, h, {}, {}, 0};
    search.h_order.resize(static_cast<size_t>(h.order()));
    for (int v = 0; v < h.order(); ++v) search.h_order[static_cast<size_t>(v)] = v;
    std::sort(search.h_order.begin(), search.h_order.end(), [&](int a, int b) {
        if (h.degree(a) != h.degree(b)) return h.degree(a) > h.degree(b);
        return a < b;
    });
    search.assigned.resize(search.h_order.size(), 0);
    if (!search.rec(0)) return std::nullopt;

    BranchModel m;
    m.branch_sets.resize(static_cast<size_t>(h.order()));
    for (size_t i = 0; i < search.h_order.size(); ++i)
        m.branch_sets[static_cast<size_t>(search.h_order[i])] = search.assigned[i];
    return m;
}

bool check_model(const Graph& g, const Graph& h, const BranchModel& m) {
    if (m.branch_sets.size() != static_cast<size_t>(h.order())) return false;
    std::uint64_t seen = 0;
    for (std::uint64_t b : m.branch_sets) {
        if (!b || (b & ~g.vertex_mask())) return false;
        if (b & seen) return false;
        seen |= b;
        int v = std::countr_zero(b);
        if (component_of(g, v, b) != b) return false;
    }
    for (int a = 0; a < h.order(); ++a) {
        for (int b = a + 1; b < h.order(); ++b) {
            if (!h.has_edge(a, b)) continue;
            bool hit = false;
            for_each_bit(m.branch_sets[static_cast<size_t>(a)], [&](int v) {
                if (g.neighbors(v) & m.branch_sets[static_cast<size_t>(b)]) hit = true;
            });
            if (!hit) return false;
        }
    }
    return true;
}

std::optional<std::pair<int, BranchModel>> has_kteq_minor(const Graph& g, int t) {
    auto [disjoint, shared] = kt_doubleminus(t);
    if (auto m = has_minor(g, disjoint)) return std::make_pair(0, *m);
    if (auto m = has_minor(g, shared)) return std::make_pair(1, *m);
    return std::nullopt;
}

std::optional<std::pair<int, BranchModel>> has_k9eq_minor(const Graph& g) {
    return has_kteq_minor(g, 9);
}

namespace {

// Can the h blocks be matched to H's vertices so every H-edge is realized?
bool blocks_realize(const Graph& g, const Graph& h, const std::vector<std::uint64_t>& blocks,
                    std::vector<int>& block_of, std::uint64_t used_blocks, int hv) {
    if (hv == h.order()) return true;
    for (size_t b = 0; b < blocks.size(); ++b) {
        if ((used_blocks >> b) & 1u) continue;
        bool ok = true;
        for (int j = 0; j < hv && ok; ++j) {
            if (!h.has_edge(hv, j)) continue;
            bool hit = false;
            for_each_bit(blocks[b], [&](int v) {
                if (g.neighbors(v) & blocks[static_cast<size_t>(block_of[static_cast<size_t>(j)])])
                    hit = true;
            });
            if (!hit) ok = false;
        }
        if (!ok) continue;
        block_of[static_cast<size_t>(hv)] = static_cast<int>(b);
        if (blocks_realize(g, h, blocks, block_of, used_blocks | (1ull << b), hv + 1)) return true;
    }
    return false;
}

}  // namespace

bool brute_minor_oracle(const Graph& g, const Graph& h) {
    if (g.order() > 9 || h.order() > 7)
        throw std::invalid_argument("brute_minor_oracle: guard exceeded (|G| <= 9, |H| <= 7)");
    int n = g.order(), hk = h.order();
    if (hk < 1) throw std::invalid_argument("brute_minor_oracle: need |H| >= 1");
    if (n < hk) return false;

    for (std::uint64_t sub = 0; sub < (1ull << n); ++sub) {
        auto verts = mask_to_vector(sub);
        int k = static_cast<int>(verts.size());
        if (k < hk) continue;
        // Restricted growth strings enumerate unordered partitions of verts.
        std::vector<int> rgs(static_cast<size_t>(k), 0);
        while (true) {
            int nblocks = *std::max_element(rgs.begin(), rgs.end()) + 1;
            if (nblocks == hk) {
                std::vector<std::uint64_t> blocks(static_cast<size_t>(hk), 0);
                for (int i = 0; i < k; ++i)
                    blocks[static_cast<size_t>(rgs[static_cast<size_t>(i)])] |=
                        (1ull << verts[static_cast<size_t>(i)]);
                bool all_connected = true;
                for (std::uint64_t b : blocks)
                    if (component_of(g, std::countr_zero(b), b) != b) all_connected = false;
                if (all_connected) {
                    std::vector<int> block_of(static_cast<size_t>(hk), -1);
                    if (blocks_realize(g, h, blocks, block_of, 0, 0)) return true;
                }
            }
            // Next RGS.
            int i = k - 1;
            while (i > 0) {
                int maxprev = *std::max_element(rgs.begin(), rgs.begin() + i) + 1;
                if (rgs[static_cast<size_t>(i)] < maxprev && rgs[static_cast<size_t>(i)] < hk - 1) break;
                --i;
            }
            if (i == 0) break;
            rgs[static_cast<size_t>(i)]++;
            std::fill(rgs.begin() + i + 1, rgs.end(), 0);
        }
    }
    return false;
}

}  // namespace gmw
