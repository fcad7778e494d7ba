#include <benchmark/benchmark.h>

#include <graphembed/diffusion.hpp>
#include <graphembed/features.hpp>
#include <graphembed/graph.hpp>
#include <graphembed/rng.hpp>
#include <graphembed/trainer.hpp>

using namespace graphembed;

namespace {

Graph make_graph(std::uint32_t n, std::uint32_t m, std::uint64_t seed = 17) {
  Rng rng(seed);
  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(m);
  for (std::uint32_t i = 0; i < m; ++i) {
    edges.emplace_back(rng.next_below(n), rng.next_below(n));
  }
  return Graph::from_edges(n, edges);
}

void BM_ExtractCooccurrences(benchmark::State& state) {
  const Graph g = make_graph(2000, 10000);
  const Corpus corpus =
      generate_corpus(g, {.tree_size = 20, .replicates = 5, .seed = 2, .workers = 1});
  for (auto _ : state) {
    const auto counts = extract_cooccurrences(corpus, 3, g.vertex_count());
    benchmark::DoNotOptimize(counts.total());
  }
}
BENCHMARK(BM_ExtractCooccurrences)->Unit(benchmark::kMillisecond);

void BM_PairUpdate(benchmark::State& state) {
  const std::uint32_t n = 4096;
  const std::uint32_t d = static_cast<std::uint32_t>(state.range(0));
  std::vector<std::uint64_t> freq(n, 1);
  const auto tree = build_huffman_tree(freq);
  EmbeddingModel model(n, d, 3);
  Rng rng(5);
  for (VertexId v = 0; v < n; ++v) {
    for (double& x : model.embedding(v)) x = rng.next_double(-0.1, 0.1);
  }
  for (auto _ : state) {
    const VertexId v = rng.next_below(n);
    const VertexId u = rng.next_below(n);
    benchmark::DoNotOptimize(pair_update(model, tree, v, 1, u, 0.025));
  }
}
BENCHMARK(BM_PairUpdate)->Arg(32)->Arg(128);

void BM_TrainEpoch(benchmark::State& state) {
  const std::uint32_t n = static_cast<std::uint32_t>(state.range(0));
  const Graph g = make_graph(n, n * 5);
  const Corpus corpus =
      generate_corpus(g, {.tree_size = 20, .replicates = 5, .seed = 3, .workers = 1});
  const auto counts = extract_cooccurrences(corpus, 2, g.vertex_count());
  for (auto _ : state) {
    TrainStats stats;
    const auto model = train(counts, {.dim = 32, .epochs = 1, .workers = 1, .seed = 9},
                             corpus.vertex_counts, &stats);
    benchmark::DoNotOptimize(model.embedding(0).data());
    state.SetIterationTime(stats.epoch_seconds[0]);
  }
}
BENCHMARK(BM_TrainEpoch)->Arg(1000)->Arg(2000)->Arg(4000)->UseManualTime()->Unit(benchmark::kMillisecond);

} // namespace
