#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gmw/canonical.hpp"
#include "gmw/minor.hpp"
#include "gmw/named.hpp"
#include "helpers.hpp"

using namespace gmw;

TEST_CASE("has_minor basic examples") {
    auto [d9, s9] = kt_doubleminus(9);
    auto m1 = has_minor(complete_graph(9), d9);
    REQUIRE(m1);
    CHECK(check_model(complete_graph(9), d9, *m1));
    auto m2 = has_minor(complete_graph(9), s9);
    REQUIRE(m2);
    CHECK(check_model(complete_graph(9), s9, *m2));

    // A tree has no K3 minor.
    Graph tree(10);
    for (int v = 1; v < 10; ++v) tree.add_edge(v, (v - 1) / 2);
    CHECK(!has_minor(tree, complete_graph(3)));

    CHECK(has_minor(cycle_graph(5), complete_graph(3)));
    CHECK(!has_minor(cycle_graph(5), complete_graph(4)));
}

TEST_CASE("Petersen graph has a K5 minor: explicit matching contraction") {
    // brute_minor_oracle is guarded to |G| <= 9, so the Petersen instance is
    // certified by an explicitly constructed model instead: contracting the
    // five spokes i -- i+5 leaves K5.
    Graph pet = petersen_graph();
    BranchModel spokes;
    for (int i = 0; i < 5; ++i)
        spokes.branch_sets.push_back((1ull << i) | (1ull << (i + 5)));
    CHECK(check_model(pet, complete_graph(5), spokes));
    auto found = has_minor(pet, complete_graph(5));
    REQUIRE(found);
    CHECK(check_model(pet, complete_graph(5), *found));
}

TEST_CASE("check_model rejects malformed certificates") {
    Graph g = complete_graph(5);
    Graph h = complete_graph(3);
    BranchModel ok{{1ull << 0, 1ull << 1, 1ull << 2}};
    CHECK(check_model(g, h, ok));
    BranchModel overlap{{0b11, 0b10, 0b100}};
    CHECK(!check_model(g, h, overlap));
    BranchModel empty{{1ull << 0, 0, 1ull << 2}};
    CHECK(!check_model(g, h, empty));
    BranchModel wrong_count{{1ull << 0, 1ull << 1}};
    CHECK(!check_model(g, h, wrong_count));
    // Disconnected branch set.
    Graph p4(4);
    p4.add_edge(0, 1);
    p4.add_edge(1, 2);
    p4.add_edge(2, 3);
    BranchModel disc{{(1ull << 0) | (1ull << 2), 1ull << 1}};
    CHECK(!check_model(p4, complete_graph(2), disc));
    // Missing required H-edge.
    Graph two_edges(4);
    two_edges.add_edge(0, 1);
    two_edges.add_edge(2, 3);
    BranchModel nolink{{(1ull << 0) | (1ull << 1), (1ull << 2) | (1ull << 3)}};
    CHECK(!check_model(two_edges, complete_graph(2), nolink));
}

TEST_CASE("has_k9eq_minor examples") {
    CHECK(has_k9eq_minor(complete_graph(9)));
    CHECK(!has_k9eq_minor(complete_graph(8)));
    CHECK(!has_k9eq_minor(complete_multipartite({2, 2, 2, 2, 2})));
    auto both = kt_doubleminus(9);
    auto r0 = has_k9eq_minor(both.first);
    REQUIRE(r0);
    CHECK(r0->first == 0);
    auto r1 = has_k9eq_minor(both.second);
    REQUIRE(r1);
}

TEST_CASE("brute oracle examples and guard") {
    CHECK(brute_minor_oracle(cycle_graph(5), complete_graph(3)));
    CHECK(brute_minor_oracle(cycle_graph(4), complete_graph(3)));
    CHECK(!brute_minor_oracle(kt_minus(4), complete_graph(4)));
    CHECK_THROWS(brute_minor_oracle(petersen_graph(), complete_graph(5)));
    CHECK_THROWS(brute_minor_oracle(complete_graph(9), complete_graph(8)));
}

TEST_CASE("oracle agreement, sampled (full sweep in acceptance)") {
    std::mt19937 rng(505);
    std::vector<Graph> hs{complete_graph(3), complete_graph(4), kt_minus(4), cycle_graph(4),
                          complete_graph(5)};
    for (int i = 0; i < 400; ++i) {
        Graph g = gmwtest::random_graph(rng, 6, 0.4 + 0.2 * (i % 3));
        for (const Graph& h : hs)
            CHECK(static_cast<bool>(has_minor(g, h)) == brute_minor_oracle(g, h));
    }
}

TEST_CASE("certificate soundness fuzz") {
    std::mt19937 rng(606);
    std::uniform_int_distribution<int> gn(5, 10), hn(3, 5);
    std::uniform_real_distribution<double> dens(0.3, 0.9);
    int positives = 0;
    while (positives < 1000) {
        Graph g = gmwtest::random_graph(rng, gn(rng), dens(rng));
        Graph h = gmwtest::random_graph(rng, hn(rng), dens(rng));
        if (auto m = has_minor(g, h)) {
            CHECK(check_model(g, h, *m));
            ++positives;
        }
    }
}

TEST_CASE("monotonicity under edge addition") {
    std::mt19937 rng(707);
    for (int i = 0; i < 200; ++i) {
        Graph g = gmwtest::random_graph(rng, 7, 0.4);
        Graph h = gmwtest::random_graph(rng, 4, 0.7);
        if (!has_minor(g, h)) continue;
        for (int u = 0; u < 7; ++u)
            for (int v = u + 1; v < 7; ++v) {
                if (g.has_edge(u, v)) continue;
                Graph g2 = g;
                g2.add_edge(u, v);
                CHECK(has_minor(g2, h));
            }
    }
}

TEST_CASE("minor-step consistency on small instances") {
    // G >= H iff G ~ H or some single minor step of G still has H as a minor.
    std::mt19937 rng(808);
    for (int i = 0; i < 60; ++i) {
        Graph g = gmwtest::random_graph(rng, 6, 0.5);
        Graph h = gmwtest::random_graph(rng, 4, 0.6);
        bool direct = static_cast<bool>(has_minor(g, h));
        bool via_step = isomorphic(g, h);
        for (int v = 0; v < g.order() && !via_step; ++v)
            via_step = static_cast<bool>(
                has_minor(minor_step(g, MinorStep::delete_vertex(v)).graph, h));
        for (int u = 0; u < g.order() && !via_step; ++u)
            for (int v = u + 1; v < g.order() && !via_step; ++v) {
                if (!g.has_edge(u, v)) continue;
                via_step =
                    static_cast<bool>(has_minor(minor_step(g, MinorStep::delete_edge(u, v)).graph, h)) ||
                    static_cast<bool>(has_minor(minor_step(g, MinorStep::contract_edge(u, v)).graph, h));
            }
        CHECK(direct == via_step);
    }
}
