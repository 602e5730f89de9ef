// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "vknot/cubic_graph.hpp"
#include "vknot/gauss_code.hpp"
#include "vknot/shadow_color.hpp"
#include "vknot/statesum.hpp"

namespace {

using namespace vknot;

// 14 classical crossings on two components, with virtual passes.
const DiagramCode& statesum_input() {
  static const DiagramCode code = parse(
      "O1+U2-O3+V20U4-O5+U6-O7+U8-O9+V21U10-O11+;U12-O13+U14-V20U1+O2-U3+O4-U5+O6-V21U7+O8-U9+O10-U11+O12-"
      "U13+O14-");
  return code;
}

// Flat code with 14 flat and 4 virtual crossings.
const DiagramCode& shadow_input() {
  static const DiagramCode code = parse(
      "F1F2V15F3F4F5F6V16F7F8F9F1F10F11V17F12F13F14F2F3V15F4F5F6F7V16F8F9F10V18F11F12F13F14V17V18");
  return code;
}

const CubicGraph& graph_input() {
  // Generalized Petersen graph GP(8, 3): 16 vertices, 24 edges.
  static const CubicGraph g = [] {
    std::vector<CubicGraph::Edge> edges;
    const std::size_t k = 8;
    for (std::size_t i = 0; i < k; ++i) {
      edges.emplace_back(i, (i + 1) % k);
      edges.emplace_back(i, i + k);
      edges.emplace_back(i + k, (i + 3) % k + k);
    }
    return CubicGraph(2 * k, edges);
  }();
  return g;
}

void BM_NaryBracketSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(nary_bracket_serial(statesum_input(), 3));
}
void BM_NaryBracketParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(nary_bracket(statesum_input(), 3));
}

void BM_ShadowColorSerial(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_shadow_colorings_serial(shadow_input(), n));
}
void BM_ShadowColorParallel(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_shadow_colorings(shadow_input(), n));
}

void BM_EdgeColorSerial(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(edge_coloring_count_serial(graph_input(), n));
}
void BM_EdgeColorParallel(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(edge_coloring_count(graph_input(), n));
}

}  // namespace

BENCHMARK(BM_NaryBracketSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NaryBracketParallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ShadowColorSerial)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ShadowColorParallel)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_EdgeColorSerial)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EdgeColorParallel)->Arg(3)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
