#include "gmw/named.hpp"

#include <numeric>

namespace gmw {

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: need n >= 3");
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph complete_multipartite(const std::vector<int>& part_sizes) {
    int n = std::accumulate(part_sizes.begin(), part_sizes.end(), 0);
    Graph g(n);
    std::vector<int> part(static_cast<size_t>(n));
    int v = 0;
    for (size_t p = 0; p < part_sizes.size(); ++p) {
        if (part_sizes[p] <= 0) throw std::invalid_argument("complete_multipartite: empty part");
        for (int i = 0; i < part_sizes[p]; ++i) part[static_cast<size_t>(v++)] = static_cast<int>(p);
    }
    for (int u = 0; u < n; ++u)
        for (int w = u + 1; w < n; ++w)
            if (part[static_cast<size_t>(u)] != part[static_cast<size_t>(w)]) g.add_edge(u, w);
    return g;
}

Graph kt_minus(int t) {
    if (t < 2) throw std::invalid_argument("kt_minus: need t >= 2");
    Graph g = complete_graph(t);
    g.remove_edge(0, 1);
    return g;
}

std::pair<Graph, Graph> kt_doubleminus(int t) {
    if (t < 4) throw std::invalid_argument("kt_doubleminus: need t >= 4");
    Graph disjoint = complete_graph(t);
    disjoint.remove_edge(0, 1);
    disjoint.remove_edge(2, 3);
    Graph shared = complete_graph(t);
    shared.remove_edge(0, 1);
    shared.remove_edge(0, 2);
    return {disjoint, shared};
}

Graph petersen_graph() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
        g.add_edge(i, 5 + i);
    }
    return g;
}

}  // namespace gmw
