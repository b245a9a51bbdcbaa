#include <benchmark/benchmark.h>

#include <numeric>
#include <sstream>

#include "polarnet/community.hpp"
#include "polarnet/domination.hpp"
#include "polarnet/polarization.hpp"
#include "polarnet/synth.hpp"

using namespace polarnet;

namespace {

synth::PlantedGraph planted(std::size_t block) {
  const std::size_t blocks[] = {block, block, block};
  return synth::planted_partition(blocks, 10.0 / static_cast<double>(block), 1.0 / static_cast<double>(block), 1);
}

void BM_Modularity(benchmark::State& state) {
  const auto g = planted(static_cast<std::size_t>(state.range(0)));
  const auto view = underlying_undirected(g.graph);
  for (auto _ : state) benchmark::DoNotOptimize(modularity(view, g.partition));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(view.edge_count()));
}
BENCHMARK(BM_Modularity)->Arg(1000)->Arg(10000)->Arg(100000);

void BM_Louvain(benchmark::State& state) {
  const auto g = planted(static_cast<std::size_t>(state.range(0)));
  const auto view = underlying_undirected(g.graph);
  for (auto _ : state) benchmark::DoNotOptimize(detect_communities(view));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(view.edge_count()));
}
BENCHMARK(BM_Louvain)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_GreedyCurve(benchmark::State& state) {
  const auto g = planted(static_cast<std::size_t>(state.range(0)));
  const auto cands = spreaders(g.graph);
  std::vector<VertexId> targets(g.graph.vertex_count());
  std::iota(targets.begin(), targets.end(), VertexId{0});
  for (auto _ : state) benchmark::DoNotOptimize(coverage_curve(g.graph, cands, targets, cands.size()));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.graph.arc_count()));
}
BENCHMARK(BM_GreedyCurve)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_Ingest(benchmark::State& state) {
  const auto g = planted(static_cast<std::size_t>(state.range(0)));
  const auto edges = synth::with_timestamps(g.graph, synth::numbered_labels(g.graph.vertex_count()), 0, 86400 * 30, 1);
  std::ostringstream text;
  write_edge_list(edges, text);
  const std::string data = text.str();
  for (auto _ : state) {
    std::istringstream in(data);
    benchmark::DoNotOptimize(ingest_edge_list(in));
  }
  state.SetBytesProcessed(state.iterations() * static_cast<std::int64_t>(data.size()));
}
BENCHMARK(BM_Ingest)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
