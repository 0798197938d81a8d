#include <benchmark/benchmark.h>

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "seplat/appendix.hpp"
#include "seplat/digraph.hpp"
#include "seplat/menger.hpp"
#include "seplat/representation.hpp"
#include "seplat/separations.hpp"

namespace {

using namespace seplat;

// small deterministic generator, same recipe as the test corpus
Digraph sample_digraph(std::uint64_t seed, int vertices, int edges) {
    std::uint64_t state = seed;
    auto next = [&] {
        state += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    };
    std::set<std::pair<Vertex, Vertex>> edge_set;
    for (int i = 0; i < edges; ++i) {
        const Vertex from = static_cast<Vertex>(next() % vertices);
        const Vertex to = static_cast<Vertex>(next() % vertices);
        if (from != to) edge_set.insert({from, to});
    }
    std::vector<std::string> labels;
    for (int i = 0; i < vertices; ++i) labels.push_back("v" + std::to_string(i));
    VertexSet sources, sinks;
    for (int i = 0; i < vertices; ++i) {
        if (next() % 3 == 0) sources.push_back(i);
        if (next() % 3 == 0) sinks.push_back(i);
    }
    return Digraph::from_indexed(std::move(labels), {edge_set.begin(), edge_set.end()},
                                 std::move(sources), std::move(sinks));
}

void BM_MaxDisjointPaths(benchmark::State& state) {
    const Digraph d = sample_digraph(7, static_cast<int>(state.range(0)),
                                     static_cast<int>(3 * state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(max_disjoint_paths(d).size());
}
BENCHMARK(BM_MaxDisjointPaths)->Arg(10)->Arg(40)->Arg(160);

void BM_EnumerateMinimalSeparations(benchmark::State& state) {
    const Digraph d = sample_digraph(11, static_cast<int>(state.range(0)),
                                     static_cast<int>(3 * state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_minimal_separations(d, 20).size());
}
BENCHMARK(BM_EnumerateMinimalSeparations)->Arg(8)->Arg(12)->Arg(16);

void BM_InfimumPair(benchmark::State& state) {
    const Digraph d = sample_digraph(23, 10, 26);
    const auto lattice = enumerate_minimal_separations(d);
    const std::vector<VertexSet> family{lattice.elements.front(), lattice.elements.back()};
    for (auto _ : state) benchmark::DoNotOptimize(infimum(d, family).size());
}
BENCHMARK(BM_InfimumPair);

void BM_BlowUpEnumeration(benchmark::State& state) {
    const Digraph base = sample_digraph(3, 5, 12);
    const Digraph blown = blow_up(base, static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_minimal_separations(blown, 20).size());
}
BENCHMARK(BM_BlowUpEnumeration)->Arg(2)->Arg(3);

void BM_Figure1Check(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(figure1_check(static_cast<int>(state.range(0))).all_pass);
}
BENCHMARK(BM_Figure1Check)->Arg(5)->Arg(10);

} // namespace

BENCHMARK_MAIN();
