#include <benchmark/benchmark.h>

#include <graphembed/diffusion.hpp>
#include <graphembed/graph.hpp>
#include <graphembed/rng.hpp>

using namespace graphembed;

namespace {

// G(n, m) with normalization; roughly mean degree 2m/n.
Graph make_graph(std::uint32_t n, std::uint32_t m, std::uint64_t seed = 99) {
  Rng rng(seed);
  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(m);
  for (std::uint32_t i = 0; i < m; ++i) {
    edges.emplace_back(rng.next_below(n), rng.next_below(n));
  }
  return Graph::from_edges(n, edges);
}

void BM_DiffusionTree(benchmark::State& state) {
  const Graph g = make_graph(10000, 50000);
  DiffusionSampler sampler(g);
  Rng rng(7);
  std::uint64_t produced = 0;
  for (auto _ : state) {
    const auto tree = sampler.sample(rng.next_below(g.vertex_count()),
                                     static_cast<std::uint32_t>(state.range(0)), rng);
    produced += tree.vertices.size();
    benchmark::DoNotOptimize(tree.vertices.data());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(produced));
}
BENCHMARK(BM_DiffusionTree)->Arg(10)->Arg(40)->Arg(160);

void BM_EulerSequence(benchmark::State& state) {
  const Graph g = make_graph(10000, 50000);
  DiffusionSampler sampler(g);
  Rng rng(11);
  const auto tree = sampler.sample(3, static_cast<std::uint32_t>(state.range(0)), rng);
  for (auto _ : state) {
    auto seq = euler_sequence(tree);
    benchmark::DoNotOptimize(seq.data());
  }
}
BENCHMARK(BM_EulerSequence)->Arg(10)->Arg(40)->Arg(160);

void BM_DiffusionCorpus(benchmark::State& state) {
  const Graph g = make_graph(10000, 50000);
  const std::uint32_t sigma = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) {
    const Corpus corpus =
        generate_corpus(g, {.tree_size = 20, .replicates = sigma, .seed = 5, .workers = 1});
    benchmark::DoNotOptimize(corpus.sequences.data());
  }
}
BENCHMARK(BM_DiffusionCorpus)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_RandomWalkCorpus(benchmark::State& state) {
  const Graph g = make_graph(10000, 50000);
  const std::uint32_t walks = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) {
    const Corpus corpus = generate_walk_corpus(
        g, {.walk_length = 39, .walks_per_source = walks, .seed = 5, .workers = 1});
    benchmark::DoNotOptimize(corpus.sequences.data());
  }
}
BENCHMARK(BM_RandomWalkCorpus)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_BfsDistances(benchmark::State& state) {
  const Graph g = make_graph(10000, 50000);
  VertexId source = 0;
  for (auto _ : state) {
    auto dist = g.bfs_distances(source);
    benchmark::DoNotOptimize(dist.data());
    source = (source + 17) % g.vertex_count();
  }
}
BENCHMARK(BM_BfsDistances)->Unit(benchmark::kMicrosecond);

} // namespace

BENCHMARK_MAIN();
