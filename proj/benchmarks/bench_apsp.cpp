// Microbenchmarks: priority-queue throughput and all-pairs solver
// comparisons on both graph families. Wall time here complements the
// adjacency-access counter the library reports (alpha) — the counter is
// the portable figure, these numbers are machine-local.
#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>
#include <vector>

#include "pst/baselines.hpp"
#include "pst/graph.hpp"
#include "pst/indexed_min_queue.hpp"
#include "pst/pstw.hpp"

namespace {

void bm_queue_enqueue_dequeue(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::mt19937_64 rng(7);
    std::vector<double> priorities(static_cast<std::size_t>(n));
    for (double& p : priorities)
        p = static_cast<double>(rng() % 1000000) / 16.0;
    for (auto _ : state) {
        pst::IndexedMinQueue q(n);
        for (int i = 0; i < n; ++i) q.enqueue(i, priorities[static_cast<std::size_t>(i)]);
        while (!q.empty()) benchmark::DoNotOptimize(q.dequeue_min());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n) * 2);
}
BENCHMARK(bm_queue_enqueue_dequeue)->Arg(1 << 10)->Arg(1 << 14);

void bm_queue_decrease_key(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        pst::IndexedMinQueue q(n);
        for (int i = 0; i < n; ++i) q.enqueue(i, 1e6 + i);
        // Each key is decreased once, reversing the dequeue order.
        for (int i = 0; i < n; ++i) q.update(i, static_cast<double>(n - i));
        while (!q.empty()) benchmark::DoNotOptimize(q.dequeue_min());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n) * 3);
}
BENCHMARK(bm_queue_decrease_key)->Arg(1 << 10)->Arg(1 << 14);

const pst::Graph& hypercube_graph(int dim) {
    static const pst::Graph g6 = pst::gen_hypercube(6, pst::WeightRange{}, 1);
    static const pst::Graph g8 = pst::gen_hypercube(8, pst::WeightRange{}, 1);
    return dim == 6 ? g6 : g8;
}

const pst::Graph& scale_free_graph(int n) {
    static const pst::Graph g64 = pst::gen_scale_free(64, 2, pst::WeightRange{}, 1);
    static const pst::Graph g256 = pst::gen_scale_free(256, 2, pst::WeightRange{}, 1);
    return n == 64 ? g64 : g256;
}

template <pst::ApspResult (*Solver)(const pst::Graph&)>
void bm_apsp_hypercube(benchmark::State& state) {
    const pst::Graph& g = hypercube_graph(static_cast<int>(state.range(0)));
    std::uint64_t accesses = 0;
    for (auto _ : state) {
        pst::ApspResult res = Solver(g);
        accesses = res.metrics.access_count;
        benchmark::DoNotOptimize(res.dist.at(0, 0));
    }
    state.counters["alpha"] = pst::alpha(accesses, g.num_vertices());
}
BENCHMARK(bm_apsp_hypercube<pst::run_pstw>)->Arg(6)->Arg(8);
BENCHMARK(bm_apsp_hypercube<pst::apsp_dijkstra>)->Arg(6)->Arg(8);
BENCHMARK(bm_apsp_hypercube<pst::apsp_peng>)->Arg(6)->Arg(8);

template <pst::ApspResult (*Solver)(const pst::Graph&)>
void bm_apsp_scale_free(benchmark::State& state) {
    const pst::Graph& g = scale_free_graph(static_cast<int>(state.range(0)));
    std::uint64_t accesses = 0;
    for (auto _ : state) {
        pst::ApspResult res = Solver(g);
        accesses = res.metrics.access_count;
        benchmark::DoNotOptimize(res.dist.at(0, 0));
    }
    state.counters["alpha"] = pst::alpha(accesses, g.num_vertices());
}
BENCHMARK(bm_apsp_scale_free<pst::run_pstw>)->Arg(64)->Arg(256);
BENCHMARK(bm_apsp_scale_free<pst::apsp_dijkstra>)->Arg(64)->Arg(256);
BENCHMARK(bm_apsp_scale_free<pst::apsp_peng>)->Arg(64)->Arg(256);

}  // namespace

BENCHMARK_MAIN();
