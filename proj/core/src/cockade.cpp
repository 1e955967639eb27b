#include "gmw/cockade.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "gmw/canonical.hpp"
#include "gmw/named.hpp"

namespace gmw {

Graph piece_graph(PieceKind kind) {
    if (kind == PieceKind::K8) return complete_graph(8);
    return complete_multipartite({2, 2, 2, 2, 2});
}

namespace {

int piece_order(PieceKind kind) { return kind == PieceKind::K8 ? 8 : 10; }

void check_plan_shape(const CockadePlan& plan) {
    if (plan.pieces.empty()) throw std::invalid_argument("cockade plan: no pieces");
    if (plan.gluings.size() != plan.pieces.size() - 1)
        throw std::invalid_argument("cockade plan: need exactly one gluing per piece after the first");
    for (size_t i = 0; i < plan.gluings.size(); ++i)
        if (plan.gluings[i].piece != static_cast<int>(i) + 1)
            throw std::invalid_argument("cockade plan: gluing order must match piece order");
}

}  // namespace

Graph build_cockade(const CockadePlan& plan) {
    check_plan_shape(plan);
    Graph build = piece_graph(plan.pieces[0]);
    for (const Gluing& gl : plan.gluings) {
        PieceKind kind = plan.pieces[static_cast<size_t>(gl.piece)];
        Graph piece = piece_graph(kind);
        std::uint64_t local_clique = 0, host_clique = 0;
        for (int v : gl.piece_clique) {
            if (v < 0 || v >= piece.order()) throw std::invalid_argument("cockade plan: bad local vertex");
            local_clique |= (1ull << v);
        }
        for (int v : gl.host_clique) {
            if (v < 0 || v >= build.order()) throw std::invalid_argument("cockade plan: bad host vertex");
            host_clique |= (1ull << v);
        }
        if (std::popcount(local_clique) != 5 || std::popcount(host_clique) != 5)
            throw std::invalid_argument("cockade plan: gluing cliques must have 5 distinct vertices");
        if (!is_clique(piece, local_clique))
            throw std::invalid_argument("cockade plan: piece-side gluing set is not a clique");
        if (!is_clique(build, host_clique))
            throw std::invalid_argument("cockade plan: host-side gluing set is not a clique");

        std::vector<int> local_to_build(static_cast<size_t>(piece.order()), -1);
        for (int j = 0; j < 5; ++j) local_to_build[static_cast<size_t>(gl.piece_clique[j])] = gl.host_clique[j];
        int old_order = build.order();
        int fresh = old_order;
        for (int v = 0; v < piece.order(); ++v)
            if (local_to_build[static_cast<size_t>(v)] < 0) local_to_build[static_cast<size_t>(v)] = fresh++;

        Graph grown(fresh);
        for (int u = 0; u < old_order; ++u)
            for_each_bit(build.neighbors(u), [&](int v) {
                if (v > u) grown.add_edge(u, v);
            });
        for (int u = 0; u < piece.order(); ++u)
            for_each_bit(piece.neighbors(u), [&](int v) {
                if (v > u) grown.add_edge(local_to_build[static_cast<size_t>(u)],
                                          local_to_build[static_cast<size_t>(v)]);
            });
        build = std::move(grown);
    }
    return build;
}

namespace {

struct RecPiece {
    PieceKind kind;
    std::vector<int> gverts;  // vertices in the original graph
};

struct RecTree {
    std::vector<RecPiece> pieces;
    // (piece a, piece b, shared 5-clique as mask over original vertices)
    std::vector<std::tuple<int, int, std::uint64_t>> edges;
};

const std::vector<std::uint8_t>& k22222_cert() {
    static const std::vector<std::uint8_t> cert = certificate(complete_multipartite({2, 2, 2, 2, 2}));
    return cert;
}

// All 5-cliques of g within `allowed`, lexicographic by vertex list.
void five_cliques(const Graph& g, std::uint64_t allowed, std::uint64_t cur, int count, int min_next,
                  std::vector<std::uint64_t>& out) {
    if (count == 5) {
        out.push_back(cur);
        return;
    }
    std::uint64_t cands = allowed;
    for_each_bit(cur, [&](int v) { cands &= g.neighbors(v); });
    cands &= ~((min_next > 0) ? ((1ull << min_next) - 1) : 0);
    for_each_bit(cands, [&](int v) {
        five_cliques(g, allowed, cur | (1ull << v), count + 1, v + 1, out);
    });
}

bool recognize_rec(const Graph& g, std::uint64_t mask, RecTree& tree, int& root_piece) {
    auto sub = induced_subgraph(g, mask);
    int n = sub.graph.order();
    auto gverts = mask_to_vector(mask);

    if (n == 8 && sub.graph.edge_count() == 28) {
        tree.pieces.push_back({PieceKind::K8, gverts});
        root_piece = static_cast<int>(tree.pieces.size()) - 1;
        return true;
    }
    if (n == 10 && sub.graph.edge_count() == 40 && certificate(sub.graph) == k22222_cert()) {
        tree.pieces.push_back({PieceKind::K22222, gverts});
        root_piece = static_cast<int>(tree.pieces.size()) - 1;
        return true;
    }

    // Any 5-clique separator of a cockade is a gluing clique, so the first
    // one found is as good as any.
    std::vector<std::uint64_t> cliques;
    five_cliques(sub.graph, sub.graph.vertex_mask(), 0, 0, 0, cliques);
    for (std::uint64_t local_clique : cliques) {
        std::uint64_t rest = sub.graph.vertex_mask() & ~local_clique;
        if (!rest) continue;
        std::vector<std::uint64_t> comps;
        std::uint64_t left = rest;
        while (left) {
            std::uint64_t c = component_of(sub.graph, std::countr_zero(left), rest);
            comps.push_back(c);
            left &= ~c;
        }
        if (comps.size() < 2) continue;

        std::uint64_t sep_gmask = 0;
        for_each_bit(local_clique, [&](int v) { sep_gmask |= (1ull << gverts[static_cast<size_t>(v)]); });

        std::vector<int> part_roots;
        bool ok = true;
        for (std::uint64_t comp : comps) {
            std::uint64_t part_gmask = sep_gmask;
            for_each_bit(comp, [&](int v) { part_gmask |= (1ull << gverts[static_cast<size_t>(v)]); });
            int part_root = -1;
            if (!recognize_rec(g, part_gmask, tree, part_root)) {
                ok = false;
                break;
            }
            part_roots.push_back(part_root);
        }
        if (!ok) return false;  // a genuine cockade would decompose at this separator

        // Hook every later part to the first part's piece that contains the
        // separator clique.
        auto piece_containing = [&](int start_piece, std::uint64_t clique) {
            // The recursion appended this part's pieces contiguously; scan all
            // pieces and pick the first containing the clique that belongs to
            // the same part as start_piece via tree connectivity. Since the
            // clique appears only inside this part's pieces plus the other
            // parts' (which also contain it), restrict by searching from
            // start_piece through tree edges.
            std::vector<int> stack{start_piece};
            std::vector<char> seen(tree.pieces.size(), 0);
            seen[static_cast<size_t>(start_piece)] = 1;
            while (!stack.empty()) {
                int p = stack.back();
                stack.pop_back();
                std::uint64_t pm = vector_to_mask(tree.pieces[static_cast<size_t>(p)].gverts);
                if ((pm & clique) == clique) return p;
                for (auto& [a, b, c] : tree.edges) {
                    int other = -1;
                    if (a == p) other = b;
                    if (b == p) other = a;
                    if (other >= 0 && !seen[static_cast<size_t>(other)]) {
                        seen[static_cast<size_t>(other)] = 1;
                        stack.push_back(other);
                    }
                }
            }
            return -1;
        };
        int anchor = piece_containing(part_roots[0], sep_gmask);
        if (anchor < 0) return false;
        for (size_t i = 1; i < part_roots.size(); ++i) {
            int other = piece_containing(part_roots[static_cast<size_t>(i)], sep_gmask);
            if (other < 0) return false;
            tree.edges.emplace_back(anchor, other, sep_gmask);
        }
        root_piece = part_roots[0];
        return true;
    }
    return false;
}

// Isomorphism from the standard piece labeling to G[gverts]: local id -> G vertex.
std::vector<int> piece_labeling(const Graph& g, const RecPiece& piece) {
    if (piece.kind == PieceKind::K8) return piece.gverts;  // any order works for K8
    // K22222: pair each vertex with its unique non-neighbor inside the piece.
    std::uint64_t pmask = vector_to_mask(piece.gverts);
    std::vector<int> labeling;
    std::uint64_t done = 0;
    for (int v : piece.gverts) {
        if ((done >> v) & 1u) continue;
        std::uint64_t missing = pmask & ~g.closed_neighbors(v);
        if (std::popcount(missing) != 1) throw std::logic_error("cockade: bad K22222 piece");
        int partner = std::countr_zero(missing);
        labeling.push_back(v);
        labeling.push_back(partner);
        done |= (1ull << v) | (1ull << partner);
    }
    return labeling;  // locals 2i, 2i+1 are partners, matching piece_graph
}

}  // namespace

std::optional<CockadePlan> recognize_cockade(const Graph& g) {
    if (g.order() < 8) throw std::invalid_argument("recognize_cockade: need |G| >= 8");
    if (g.edge_count() != 6 * g.order() - 20) return std::nullopt;
    if (!is_connected(g)) return std::nullopt;

    RecTree tree;
    int root = -1;
    if (!recognize_rec(g, g.vertex_mask(), tree, root)) return std::nullopt;

    // Emit the plan by BFS from the root piece, tracking the build id of each
    // original vertex so the rebuild reproduces G exactly.
    size_t np = tree.pieces.size();
    std::vector<std::vector<std::pair<int, std::uint64_t>>> adj(np);
    for (auto& [a, b, clique] : tree.edges) {
        adj[static_cast<size_t>(a)].push_back({b, clique});
        adj[static_cast<size_t>(b)].push_back({a, clique});
    }

    CockadePlan plan;
    std::map<int, int> gvert_to_build;
    std::vector<int> order;          // BFS piece order (indices into tree.pieces)
    std::vector<std::uint64_t> via(np, 0);  // clique used to reach each piece
    std::vector<char> seen(np, 0);
    order.push_back(root);
    seen[static_cast<size_t>(root)] = 1;
    for (size_t qi = 0; qi < order.size(); ++qi) {
        int p = order[qi];
        for (auto& [q, clique] : adj[static_cast<size_t>(p)]) {
            if (seen[static_cast<size_t>(q)]) continue;
            seen[static_cast<size_t>(q)] = 1;
            via[static_cast<size_t>(q)] = clique;
            order.push_back(q);
        }
    }
    if (order.size() != np) throw std::logic_error("cockade: disconnected gluing tree");

    for (size_t oi = 0; oi < order.size(); ++oi) {
        const RecPiece& piece = tree.pieces[static_cast<size_t>(order[oi])];
        std::vector<int> labeling = piece_labeling(g, piece);  // local -> G vertex
        plan.pieces.push_back(piece.kind);
        if (oi == 0) {
            for (size_t local = 0; local < labeling.size(); ++local)
                gvert_to_build[labeling[local]] = static_cast<int>(local);
            continue;
        }
        std::uint64_t clique = via[static_cast<size_t>(order[oi])];
        Gluing gl;
        gl.piece = static_cast<int>(oi);
        int j = 0;
        for (size_t local = 0; local < labeling.size(); ++local) {
            if ((clique >> labeling[local]) & 1u) {
                gl.piece_clique[static_cast<size_t>(j)] = static_cast<int>(local);
                gl.host_clique[static_cast<size_t>(j)] = gvert_to_build.at(labeling[local]);
                ++j;
            }
        }
        if (j != 5) throw std::logic_error("cockade: gluing clique not inside piece");
        int next_build = static_cast<int>(gvert_to_build.size());
        for (size_t local = 0; local < labeling.size(); ++local)
            if (!((clique >> labeling[local]) & 1u)) gvert_to_build[labeling[local]] = next_build++;
        plan.gluings.push_back(gl);
    }

    if (!isomorphic(build_cockade(plan), g))
        throw std::logic_error("recognize_cockade: reconstructed plan does not rebuild the input");
    return plan;
}

Coloring cockade_coloring(const CockadePlan& plan) {
    check_plan_shape(plan);
    auto std_color = [](PieceKind kind, int local) {
        return kind == PieceKind::K8 ? local : local / 2;
    };
    std::vector<int> colors;
    for (int v = 0; v < piece_order(plan.pieces[0]); ++v)
        colors.push_back(std_color(plan.pieces[0], v));

    for (const Gluing& gl : plan.gluings) {
        PieceKind kind = plan.pieces[static_cast<size_t>(gl.piece)];
        // Palette permutation forcing agreement on the shared 5-clique.
        std::array<int, 8> perm;
        perm.fill(-1);
        std::array<char, 8> target_used{};
        for (int j = 0; j < 5; ++j) {
            int from = std_color(kind, gl.piece_clique[static_cast<size_t>(j)]);
            int to = colors[static_cast<size_t>(gl.host_clique[static_cast<size_t>(j)])];
            perm[static_cast<size_t>(from)] = to;
            target_used[static_cast<size_t>(to)] = 1;
        }
        int next = 0;
        for (int c = 0; c < 8; ++c) {
            if (perm[static_cast<size_t>(c)] >= 0) continue;
            while (target_used[static_cast<size_t>(next)]) ++next;
            perm[static_cast<size_t>(c)] = next;
            target_used[static_cast<size_t>(next)] = 1;
        }
        std::uint64_t glued = 0;
        for (int v : gl.piece_clique) glued |= (1ull << v);
        for (int v = 0; v < piece_order(kind); ++v)
            if (!((glued >> v) & 1u)) colors.push_back(perm[static_cast<size_t>(std_color(kind, v))]);
    }

    std::uint64_t used = 0;
    for (int c : colors) used |= (1ull << c);
    return {std::move(colors), std::popcount(used)};
}

std::string plan_to_text(const CockadePlan& plan) {
    check_plan_shape(plan);
    std::ostringstream out;
    out << "pieces:";
    for (PieceKind k : plan.pieces) out << ' ' << (k == PieceKind::K8 ? "K8" : "K22222");
    out << '\n';
    for (const Gluing& gl : plan.gluings) {
        out << "glue: " << gl.piece;
        for (int v : gl.piece_clique) out << ' ' << v;
        out << " ->";
        for (int v : gl.host_clique) out << ' ' << v;
        out << '\n';
    }
    return out.str();
}

CockadePlan plan_from_text(const std::string& text) {
    CockadePlan plan;
    std::istringstream in(text);
    std::string line;
    bool have_pieces = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "pieces:") {
            std::string name;
            while (ls >> name) {
                if (name == "K8")
                    plan.pieces.push_back(PieceKind::K8);
                else if (name == "K22222")
                    plan.pieces.push_back(PieceKind::K22222);
                else
                    throw std::invalid_argument("cockade plan: unknown piece kind '" + name + "'");
            }
            have_pieces = true;
        } else if (tag == "glue:") {
            Gluing gl;
            std::string arrow;
            if (!(ls >> gl.piece)) throw std::invalid_argument("cockade plan: bad glue line");
            for (int& v : gl.piece_clique)
                if (!(ls >> v)) throw std::invalid_argument("cockade plan: bad glue line");
            if (!(ls >> arrow) || arrow != "->")
                throw std::invalid_argument("cockade plan: missing '->' in glue line");
            for (int& v : gl.host_clique)
                if (!(ls >> v)) throw std::invalid_argument("cockade plan: bad glue line");
            plan.gluings.push_back(gl);
        } else {
            throw std::invalid_argument("cockade plan: unknown line '" + line + "'");
        }
    }
    if (!have_pieces) throw std::invalid_argument("cockade plan: missing pieces line");
    check_plan_shape(plan);
    return plan;
}

}  // namespace gmw
