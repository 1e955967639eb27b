#include <benchmark/benchmark.h>

#include <random>

#include "gmw/canonical.hpp"
#include "gmw/coloring.hpp"
#include "gmw/generate.hpp"
#include "gmw/minor.hpp"
#include "gmw/named.hpp"
#include "gmw/verify.hpp"

using namespace gmw;

namespace {

Graph random_graph(std::mt19937& rng, int n, double p) {
    Graph g(n);
    std::bernoulli_distribution edge(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (edge(rng)) g.add_edge(u, v);
    return g;
}

void BM_canonical_form(benchmark::State& state) {
    std::mt19937 rng(1);
    std::vector<Graph> graphs;
    for (int i = 0; i < 64; ++i) graphs.push_back(random_graph(rng, static_cast<int>(state.range(0)), 0.5));
    size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(certificate(graphs[i % graphs.size()]));
        ++i;
    }
}
BENCHMARK(BM_canonical_form)->Arg(8)->Arg(11)->Arg(14);

void BM_has_k7eq_minor(benchmark::State& state) {
    // The verifier's inner loop: a 10-vertex deletion residue vs K7^=.
    std::mt19937 rng(2);
    std::vector<Graph> graphs;
    for (int i = 0; i < 64; ++i) {
        Graph g = random_graph(rng, 10, 0.75);
        graphs.push_back(g);
    }
    size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(has_kteq_minor(graphs[i % graphs.size()], 7));
        ++i;
    }
}
BENCHMARK(BM_has_k7eq_minor);

void BM_generate(benchmark::State& state) {
    for (auto _ : state) {
        long count = generate_count({static_cast<int>(state.range(0)), 0});
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_generate)->Arg(6)->Arg(7);

void BM_chromatic(benchmark::State& state) {
    std::mt19937 rng(3);
    std::vector<Graph> graphs;
    for (int i = 0; i < 64; ++i) graphs.push_back(random_graph(rng, 12, 0.5));
    size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(chromatic_number(graphs[i % graphs.size()]));
        ++i;
    }
}
BENCHMARK(BM_chromatic);

void BM_deletion_vertex(benchmark::State& state) {
    std::mt19937 rng(4);
    std::vector<Graph> graphs;
    while (graphs.size() < 16) {
        Graph g = random_graph(rng, 11, 0.7);
        if (g.min_degree() >= 6) graphs.push_back(g);
    }
    size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(deletion_vertex(graphs[i % graphs.size()], 7));
        ++i;
    }
}
BENCHMARK(BM_deletion_vertex);

}  // namespace
