#include <benchmark/benchmark.h>

#include "tcover/auxiliary.hpp"
#include "tcover/chain.hpp"
#include "tcover/enumerate.hpp"
#include "tcover/fixtures.hpp"
#include "tcover/prng.hpp"
#include "tcover/random_graph.hpp"
#include "tcover/tree_cover.hpp"
#include "tcover/vertex_cover.hpp"

using namespace tcover;

namespace {

void BM_TauRandom(benchmark::State& state) {
  const int edges = static_cast<int>(state.range(0));
  RngStream rng(1);
  std::vector<Edge> es;
  for (int i = 0; i < edges; ++i) es.push_back({int(rng.below(6)), int(rng.below(6)), int(rng.below(6))});
  const auto h = PartiteHypergraph::from_edges_dedup({6, 6, 6}, es);
  for (auto _ : state) benchmark::DoNotOptimize(tau(h).size);
}
BENCHMARK(BM_TauRandom)->Arg(10)->Arg(20)->Arg(40);

void BM_TreeCover(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto g = random_colouring(sample_gnp({n, 0.3, 2}).graph, 3, 3);
  for (auto _ : state) benchmark::DoNotOptimize(tree_cover_number(g).size);
}
BENCHMARK(BM_TreeCover)->Arg(16)->Arg(64)->Arg(256);

void BM_AuxiliaryTau(benchmark::State& state) {
  const auto g = random_colouring(sample_gnp({static_cast<int>(state.range(0)), 0.2, 4}).graph, 3, 5);
  for (auto _ : state) benchmark::DoNotOptimize(tau_number(build_auxiliary(g).hypergraph));
}
BENCHMARK(BM_AuxiliaryTau)->Arg(32)->Arg(128);

void BM_EnumerateIntersecting(benchmark::State& state) {
  EnumerateOptions o;
  o.r = 3;
  o.max_part = static_cast<int>(state.range(0));
  o.pairwise_intersecting_only = true;
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_masks(o, [](std::uint64_t) { return true; }).emitted);
}
BENCHMARK(BM_EnumerateIntersecting)->Arg(2)->Arg(3);

void BM_SearchChain(benchmark::State& state) {
  const auto h = state.range(0) == 0 ? fixtures::h_star() : fixtures::ems_augmented();
  const int k = state.range(0) == 0 ? 3 : 4;
  for (auto _ : state) benchmark::DoNotOptimize(search_chain(h, k).has_value());
}
BENCHMARK(BM_SearchChain)->Arg(0)->Arg(1);

}  // namespace

BENCHMARK_MAIN();
