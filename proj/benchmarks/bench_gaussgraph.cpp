#include <benchmark/benchmark.h>

#include "gaussgraph/extension.hpp"
#include "gaussgraph/oracle.hpp"
#include "gaussgraph/realize.hpp"

using namespace gaussgraph;

namespace {

GraphGaussCode graph_code(const ParsedCode& code) {
  if (const auto* seq = std::get_if<CrossingSequence>(&code)) return curve_as_graph(*seq);
  return std::get<GraphGaussCode>(code);
}

// Split graph and chord diagram of a generated code with `crossings` crossings.
SplitGraph split_instance(GenBase base, int crossings, std::uint64_t seed) {
  const auto gen = generate_immersion(seed, {base, 4, crossings, crossings});
  return build_split_graph(full_split(graph_code(gen.code)).code);
}

void BM_TraceFaces(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto dense = generate_immersion(1, {GenBase::Theta, 4, n, n}).immersion.map.dense();
  for (auto _ : state) benchmark::DoNotOptimize(trace_faces(dense.graph, dense.rotation));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_TraceFaces)->RangeMultiplier(2)->Range(2, 64)->Complexity();

void BM_ExtendCircle(benchmark::State& state) {
  const SplitGraph sg = split_instance(GenBase::Curve, static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(extend_circle(sg.graph, sg.rotation, sg.chords));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ExtendCircle)->RangeMultiplier(2)->Range(2, 64)->Complexity();

void BM_ExtendGeneral(benchmark::State& state) {
  const SplitGraph sg = split_instance(GenBase::Dumbbell, static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(extend_general(sg.graph, sg.rotation, sg.chords));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ExtendGeneral)->RangeMultiplier(2)->Range(2, 32)->Complexity();

void BM_RealizeCurve(benchmark::State& state) {
  const auto gen = generate_immersion(4, {GenBase::Curve, 0, static_cast<int>(state.range(0)),
                                          static_cast<int>(state.range(0))});
  const auto& seq = std::get<CrossingSequence>(gen.code);
  for (auto _ : state) benchmark::DoNotOptimize(realize_curve(seq));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_RealizeCurve)->RangeMultiplier(2)->Range(2, 64)->Complexity();

void BM_RealizeGraph(benchmark::State& state) {
  const auto gen = generate_immersion(5, {GenBase::Theta, 4, static_cast<int>(state.range(0)),
                                          static_cast<int>(state.range(0))});
  const auto& code = std::get<GraphGaussCode>(gen.code);
  for (auto _ : state) benchmark::DoNotOptimize(realize_graph(code));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_RealizeGraph)->RangeMultiplier(2)->Range(2, 32)->Complexity();

}  // namespace

BENCHMARK_MAIN();
