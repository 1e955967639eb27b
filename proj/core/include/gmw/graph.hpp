#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gmw {

// Simple undirected graph on at most 64 vertices, adjacency stored as one
// 64-bit neighbor mask per vertex. Vertex indices are 0-based. Treated as an
// immutable value after construction; all operations return new graphs.
class Graph {
public:
    static constexpr int kMaxVertices = 64;

    Graph() = default;

    explicit Graph(int order) : n_(order), adj_(static_cast<size_t>(order), 0) {
        if (order < 0 || order > kMaxVertices)
            throw std::invalid_argument("Graph: order out of range [0,64]: " + std::to_string(order));
    }

    int order() const { return n_; }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return (adj_[static_cast<size_t>(u)] >> v) & 1u;
    }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("Graph: loops are not allowed");
        adj_[static_cast<size_t>(u)] |= (1ull << v);
        adj_[static_cast<size_t>(v)] |= (1ull << u);
    }

    void remove_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        adj_[static_cast<size_t>(u)] &= ~(1ull << v);
        adj_[static_cast<size_t>(v)] &= ~(1ull << u);
    }

    // Neighbor set of v as a bit mask.
    std::uint64_t neighbors(int v) const {
        check_vertex(v);
        return adj_[static_cast<size_t>(v)];
    }

    // Closed neighborhood N[v].
    std::uint64_t closed_neighbors(int v) const { return neighbors(v) | (1ull << v); }

    int degree(int v) const { return std::popcount(neighbors(v)); }

    int min_degree() const {
        int d = n_ == 0 ? 0 : n_;
        for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
        return d;
    }

    int max_degree() const {
        int d = 0;
        for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
        return d;
    }

    int edge_count() const {
        int twice = 0;
        for (int v = 0; v < n_; ++v) twice += degree(v);
        return twice / 2;
    }

    // Mask with one bit per vertex of the graph.
    std::uint64_t vertex_mask() const {
        return n_ == 64 ? ~0ull : ((1ull << n_) - 1);
    }

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }
    bool operator!=(const Graph& o) const { return !(*this == o); }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw std::invalid_argument("Graph: vertex index " + std::to_string(v) +
                                        " out of range for order " + std::to_string(n_));
    }

    int n_ = 0;
    std::vector<std::uint64_t> adj_;
};

// Iterate the set bits of a mask in ascending order.
template <typename F>
inline void for_each_bit(std::uint64_t mask, F&& f) {
    while (mask) {
        int v = std::countr_zero(mask);
        mask &= mask - 1;
        f(v);
    }
}

inline std::vector<int> mask_to_vector(std::uint64_t mask) {
    std::vector<int> out;
    for_each_bit(mask, [&](int v) { out.push_back(v); });
    return out;
}

inline std::uint64_t vector_to_mask(const std::vector<int>& vs) {
    std::uint64_t m = 0;
    for (int v : vs) m |= (1ull << v);
    return m;
}

// A single minor-forming step.
struct MinorStep {
    enum class Kind { DeleteVertex, DeleteEdge, ContractEdge };
    Kind kind;
    int u = -1;
    int v = -1;  // unused for DeleteVertex

    static MinorStep delete_vertex(int v) { return {Kind::DeleteVertex, v, -1}; }
    static MinorStep delete_edge(int u, int v) { return {Kind::DeleteEdge, u, v}; }
    static MinorStep contract_edge(int u, int v) { return {Kind::ContractEdge, u, v}; }
};

// Result of an operation that relabels vertices: the graph plus, for each old
// vertex, its new index (or -1 if removed/merged away).
struct RelabeledGraph {
    Graph graph;
    std::vector<int> old_to_new;
};

// Apply one minor step. Contraction merges u,v into the lower-indexed vertex
// and compacts indices; the index map is returned so certificates can be
// translated across steps.
RelabeledGraph minor_step(const Graph& g, const MinorStep& step);

Graph complement(const Graph& g);

// Induced subgraph G[S]; old_to_new records the index remapping.
RelabeledGraph induced_subgraph(const Graph& g, std::uint64_t vertex_set);

// Exact maximum independent set (branch and bound); returns (alpha, witness mask).
std::pair<int, std::uint64_t> independence_number(const Graph& g);

// Exact maximum clique, via independence number of the complement.
std::pair<int, std::uint64_t> clique_number(const Graph& g);

bool is_connected(const Graph& g);

// Connected component containing v, restricted to `allowed` (v must be in it).
std::uint64_t component_of(const Graph& g, int v, std::uint64_t allowed);

bool is_clique(const Graph& g, std::uint64_t vertex_set);

}  // namespace gmw
