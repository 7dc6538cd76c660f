#include <benchmark/benchmark.h>

#include <map>
#include <random>
#include <string>
#include <vector>

#include <ovq/cover.hpp>
#include <ovq/global_metrics.hpp>
#include <ovq/graph.hpp>
#include <ovq/report.hpp>

namespace {

// Ring of blocks: a global path plus two chords per block; block b's
// community also owns the first node of block b+1, so v1 coefficients are
// non-trivial on the seams.
struct Instance {
    ovq::Graph graph;
    ovq::Cover cover;
};

Instance make_instance(int communities, int block) {
    int nodes = communities * block;
    ovq::GraphBuilder builder;
    for (int i = 0; i < nodes; ++i)
        builder.intern(std::to_string(i));
    for (int i = 0; i + 1 < nodes; ++i)
        builder.add_edge(i, i + 1, 1.0);
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<int> offset(2, block - 2);
    for (int b = 0; b < communities; ++b) {
        int base = b * block;
        builder.add_edge(base, base + offset(rng), 1.0);
        builder.add_edge(base + 1, base + offset(rng), 1.0);
    }
    ovq::Graph g = builder.build();

    std::vector<ovq::Community> comms(static_cast<size_t>(communities));
    for (int b = 0; b < communities; ++b) {
        comms[static_cast<size_t>(b)].id = b;
        int base = b * block;
        int end = std::min(base + block + 1, nodes);
        for (int i = base; i < end; ++i)
            comms[static_cast<size_t>(b)].members.emplace_back(i, 1.0);
    }
    ovq::Cover crisp(g.table(), std::move(comms), ovq::CoverKind::Crisp);
    ovq::BelongingConfig cfg{ovq::Scheme::V1, ovq::BelongingFn::Product, 30.0};
    ovq::Cover fuzzy = ovq::resolve_cover(g, crisp, cfg);
    return Instance{std::move(g), std::move(fuzzy)};
}

const Instance& instance(int64_t communities) {
    static std::map<int64_t, Instance> cache;
    auto it = cache.find(communities);
    if (it == cache.end())
        it = cache.emplace(communities, make_instance(static_cast<int>(communities), 50)).first;
    return it->second;
}

void BM_CommunityAggregates(benchmark::State& state) {
    const Instance& inst = instance(state.range(0));
    ovq::BelongingConfig cfg{ovq::Scheme::Given, ovq::BelongingFn::Product, 30.0};
    for (auto _ : state)
        benchmark::DoNotOptimize(ovq::community_aggregates(inst.graph, inst.cover, cfg));
    state.SetItemsProcessed(state.iterations()
                            * static_cast<int64_t>(inst.graph.edges().size()));
}

void BM_QOvLink(benchmark::State& state) {
    const Instance& inst = instance(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(ovq::q_ov_link(inst.graph, inst.cover, 30.0));
    state.SetItemsProcessed(state.iterations()
                            * static_cast<int64_t>(inst.graph.edges().size()));
}

void BM_FullReport(benchmark::State& state) {
    const Instance& inst = instance(state.range(0));
    ovq::BelongingConfig cfg{ovq::Scheme::Given, ovq::BelongingFn::Product, 30.0};
    for (auto _ : state)
        benchmark::DoNotOptimize(ovq::compute_report(inst.graph, inst.cover, cfg));
    state.SetItemsProcessed(state.iterations()
                            * static_cast<int64_t>(inst.graph.edges().size()));
}

} // namespace

BENCHMARK(BM_CommunityAggregates)->Arg(100)->Arg(1000);
BENCHMARK(BM_QOvLink)->Arg(100)->Arg(1000);
BENCHMARK(BM_FullReport)->Arg(100)->Arg(1000);

BENCHMARK_MAIN();
