#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gmw/canonical.hpp"
#include "gmw/graph.hpp"
#include "gmw/graph6.hpp"
#include "gmw/named.hpp"
#include "helpers.hpp"

using namespace gmw;

TEST_CASE("graph6 hand-encoded examples") {
    Graph k3 = from_graph6("Bw");
    CHECK(k3.order() == 3);
    CHECK(k3.edge_count() == 3);
    CHECK(k3 == complete_graph(3));

    Graph k4 = from_graph6("C~");
    CHECK(k4 == complete_graph(4));

    Graph e5 = from_graph6("D??");
    CHECK(e5.order() == 5);
    CHECK(e5.edge_count() == 0);

    CHECK(to_graph6(complete_graph(3)) == "Bw");
    CHECK(to_graph6(Graph(5)) == "D??");
    // Optional header accepted.
    CHECK(from_graph6(">>graph6<<Bw") == k3);
}

TEST_CASE("graph6 errors carry byte offsets") {
    CHECK_THROWS_AS(from_graph6(""), Graph6Error);
    // Byte below the printable range.
    try {
        from_graph6("B\x1f");
        CHECK(false);
    } catch (const Graph6Error& e) {
        CHECK(e.offset() == 1);
    }
    // Truncated data section.
    CHECK_THROWS_AS(from_graph6("D?"), Graph6Error);
    // Nonzero padding bits.
    try {
        from_graph6("B?");  // fine: empty graph on 3 vertices
    } catch (...) {
        CHECK(false);
    }
    CHECK_THROWS_AS(from_graph6("Bq"), Graph6Error);  // padding bits set
}

TEST_CASE("graph6 round-trip, 10^4 random graphs up to order 12") {
    std::mt19937 rng(20260823);
    std::uniform_int_distribution<int> order(1, 12);
    std::uniform_real_distribution<double> dens(0.0, 1.0);
    for (int i = 0; i < 10000; ++i) {
        Graph g = gmwtest::random_graph(rng, order(rng), dens(rng));
        CHECK(from_graph6(to_graph6(g)) == g);
    }
    // Long-form order prefix path.
    Graph big = gmwtest::random_graph(rng, 63, 0.3);
    CHECK(from_graph6(to_graph6(big)) == big);
}

TEST_CASE("minor_step examples") {
    Graph c5 = cycle_graph(5);
    auto r = minor_step(c5, MinorStep::contract_edge(0, 1));
    CHECK(r.graph.order() == 4);
    CHECK(isomorphic(r.graph, cycle_graph(4)));

    auto k4c = minor_step(complete_graph(4), MinorStep::contract_edge(1, 3));
    CHECK(isomorphic(k4c.graph, complete_graph(3)));

    auto c4c = minor_step(cycle_graph(4), MinorStep::contract_edge(0, 1));
    CHECK(isomorphic(c4c.graph, complete_graph(3)));

    auto dv = minor_step(complete_graph(5), MinorStep::delete_vertex(2));
    CHECK(dv.graph == complete_graph(4));
    CHECK(dv.old_to_new == std::vector<int>{0, 1, -1, 2, 3});

    CHECK_THROWS(minor_step(c5, MinorStep::contract_edge(0, 2)));  // nonedge
    CHECK_THROWS(minor_step(c5, MinorStep::delete_vertex(9)));
}

TEST_CASE("contraction stays simple") {
    std::mt19937 rng(7);
    for (int i = 0; i < 500; ++i) {
        Graph g = gmwtest::random_graph(rng, 8, 0.5);
        for (int u = 0; u < 8; ++u)
            for (int v = u + 1; v < 8; ++v) {
                if (!g.has_edge(u, v)) continue;
                Graph h = minor_step(g, MinorStep::contract_edge(u, v)).graph;
                CHECK(h.order() == 7);
                for (int x = 0; x < 7; ++x) CHECK(((h.neighbors(x) >> x) & 1u) == 0);
            }
    }
}

TEST_CASE("complement examples and involution") {
    CHECK(complement(complete_graph(5)).edge_count() == 0);
    CHECK(isomorphic(complement(cycle_graph(5)), cycle_graph(5)));
    Graph m = complement(complete_multipartite({2, 2, 2, 2, 2}));
    CHECK(m.edge_count() == 5);
    CHECK(m.max_degree() == 1);  // perfect matching

    std::mt19937 rng(11);
    for (int i = 0; i < 200; ++i) {
        Graph g = gmwtest::random_graph(rng, 10, 0.4);
        CHECK(complement(complement(g)) == g);
        CHECK(g.edge_count() + complement(g).edge_count() == 45);
    }
}

TEST_CASE("induced subgraph examples") {
    CHECK(induced_subgraph(complete_graph(6), 0b011110).graph == complete_graph(4));
    Graph k2 = induced_subgraph(cycle_graph(5), 0b00011).graph;
    CHECK(k2.order() == 2);
    CHECK(k2.edge_count() == 1);
    // One vertex per part of K_{2,2,2,2,2} is a K5.
    Graph t = induced_subgraph(complete_multipartite({2, 2, 2, 2, 2}),
                               vector_to_mask({0, 2, 4, 6, 8})).graph;
    CHECK(t == complete_graph(5));
    CHECK_THROWS(induced_subgraph(cycle_graph(4), 1ull << 7));
}

TEST_CASE("independence number examples and witness") {
    CHECK(independence_number(complete_multipartite({2, 2, 2, 2, 2})).first == 2);
    CHECK(independence_number(cycle_graph(5)).first == 2);
    CHECK(independence_number(Graph(6)).first == 6);

    std::mt19937 rng(13);
    for (int i = 0; i < 300; ++i) {
        Graph g = gmwtest::random_graph(rng, 9, 0.5);
        auto [alpha, wit] = independence_number(g);
        CHECK(std::popcount(wit) == alpha);
        for_each_bit(wit, [&](int v) { CHECK((g.neighbors(v) & wit) == 0); });
    }
}

TEST_CASE("alpha equals clique number of the complement, exhaustive to order 6") {
    long failures = 0;
    for (int n = 1; n <= 6; ++n)
        gmwtest::all_labeled_graphs(n, [&](const Graph& g) {
            if (independence_number(g).first != clique_number(complement(g)).first) ++failures;
        });
    CHECK(failures == 0);
}

TEST_CASE("named graphs") {
    Graph km = complete_multipartite({2, 2, 2, 2, 2});
    CHECK(km.order() == 10);
    CHECK(km.edge_count() == 40);
    CHECK(km.min_degree() == 8);
    CHECK(km.max_degree() == 8);

    auto [d9, s9] = kt_doubleminus(9);
    CHECK(d9.order() == 9);
    CHECK(s9.order() == 9);
    CHECK(d9.edge_count() == 34);
    CHECK(s9.edge_count() == 34);
    CHECK(!isomorphic(d9, s9));
    auto degs = [](const Graph& g) {
        std::vector<int> d;
        for (int v = 0; v < g.order(); ++v) d.push_back(g.degree(v));
        std::sort(d.begin(), d.end());
        return d;
    };
    CHECK(degs(d9) == std::vector<int>{7, 7, 7, 7, 8, 8, 8, 8, 8});
    CHECK(degs(s9) == std::vector<int>{6, 7, 7, 8, 8, 8, 8, 8, 8});

    auto [d4, s4] = kt_doubleminus(4);
    CHECK(isomorphic(d4, cycle_graph(4)));
    CHECK(degs(s4) == std::vector<int>{1, 2, 2, 3});  // triangle with a pendant
    CHECK_THROWS(kt_doubleminus(3));

    CHECK(kt_minus(7).edge_count() == 20);
    Graph pet = petersen_graph();
    CHECK(pet.order() == 10);
    CHECK(pet.edge_count() == 15);
    CHECK(pet.min_degree() == 3);
    CHECK(pet.max_degree() == 3);
    CHECK(independence_number(pet).first == 4);
}

TEST_CASE("connectivity helpers on masks") {
    Graph c6 = cycle_graph(6);
    CHECK(is_connected(c6));
    CHECK(!is_connected(complement(complete_graph(3))));
    CHECK(component_of(c6, 0, c6.vertex_mask()) == c6.vertex_mask());
    // Remove two opposite vertices: the cycle splits.
    std::uint64_t allowed = c6.vertex_mask() & ~vector_to_mask({1, 4});
    CHECK(component_of(c6, 0, allowed) == vector_to_mask({0, 5}));
    CHECK(is_clique(complete_graph(6), 0b111010));
    CHECK(!is_clique(cycle_graph(4), 0b0111));
}
