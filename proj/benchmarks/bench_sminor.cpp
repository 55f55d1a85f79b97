#include <benchmark/benchmark.h>

#include <sminor/constructions.hpp>
#include <sminor/digraph_minors.hpp>
#include <sminor/oracles.hpp>
#include <sminor/tournament_minors.hpp>

using namespace sminor;

static void BM_ExactChiTournament(benchmark::State & state)
{
    const auto t = gen_random_tournament(static_cast<std::size_t>(state.range(0)), 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(exact_chi(t));
}
BENCHMARK(BM_ExactChiTournament)->Arg(12)->Arg(16)->Arg(20)->Arg(24);

static void BM_ExactSm(benchmark::State & state)
{
    const auto d = gen_random_digraph(static_cast<std::size_t>(state.range(0)), 0.4, 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(exact_sm(d));
}
BENCHMARK(BM_ExactSm)->Arg(8)->Arg(10)->Arg(12);

static void BM_PeelTransitivePlusPath(benchmark::State & state)
{
    const auto t = gen_random_tournament(static_cast<std::size_t>(state.range(0)), 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(peel_transitive_plus_path(t));
}
BENCHMARK(BM_PeelTransitivePlusPath)->Arg(32)->Arg(128)->Arg(512);

static void BM_StrongMinorByDomination(benchmark::State & state)
{
    const auto t = gen_random_tournament(static_cast<std::size_t>(state.range(0)), 4);
    for (auto _ : state)
        benchmark::DoNotOptimize(strong_minor_by_domination(t));
}
BENCHMARK(BM_StrongMinorByDomination)->Arg(32)->Arg(128)->Arg(512);

static void BM_EdgeSystem(benchmark::State & state)
{
    const auto d = static_cast<std::size_t>(state.range(0));
    const Tournament t(gen_layered(d, d / 2, 5).digraph);
    for (auto _ : state)
        benchmark::DoNotOptimize(extract_edge_system(t, 2, d));
}
BENCHMARK(BM_EdgeSystem)->Arg(6)->Arg(10)->Arg(14);

static void BM_FindTemplates(benchmark::State & state)
{
    const auto d = gen_random_digraph(static_cast<std::size_t>(state.range(0)), 0.3, 6);
    for (auto _ : state)
        benchmark::DoNotOptimize(find_templates(d));
}
BENCHMARK(BM_FindTemplates)->Arg(64)->Arg(256);

static void BM_EscalationHeuristic(benchmark::State & state)
{
    const auto d = gen_random_digraph(static_cast<std::size_t>(state.range(0)), 0.4, 7);
    for (auto _ : state)
        benchmark::DoNotOptimize(strong_minor_by_escalation(d, 2, LayerMode::heuristic));
}
BENCHMARK(BM_EscalationHeuristic)->Arg(16)->Arg(64);

BENCHMARK_MAIN();
