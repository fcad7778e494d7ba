#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "graphembed/graph.hpp"
#include "graphembed/rng.hpp"

namespace graphembed {

using VertexSequence = std::vector<VertexId>;

/// Tree subgraph grown around a source vertex. `vertices` is in insertion
/// order with the source first; vertex i >= 1 was attached to the tree
/// vertex at position `parent_pos[i-1]`.
struct DiffusionTree {
  VertexId source = 0;
  std::vector<VertexId> vertices;
  std::vector<std::uint32_t> parent_pos;

  /// (parent, child) pairs in insertion order.
  std::vector<std::pair<VertexId, VertexId>> edges() const;
};

struct Corpus {
  std::vector<VertexSequence> sequences;
  std::vector<std::uint64_t> vertex_counts; // per-vertex occurrences over all sequences
};

struct CorpusParams {
  std::uint32_t tree_size = 40;   // l, target vertex count per tree
  std::uint32_t replicates = 10;  // sigma, trees per source
  std::uint64_t seed = 1;
  std::uint32_t workers = 1;
};

/// Reusable sampler bound to one graph. Scratch arrays are recycled across
/// calls, so growing a tree costs O(sum of degrees of its vertices) and not
/// O(n). One instance per worker; not thread-safe.
class DiffusionSampler {
public:
  explicit DiffusionSampler(const Graph& g);

  /// Grows a tree to `target_size` vertices: each step picks a uniformly
  /// random tree vertex u, then a uniformly random graph-neighbor w of u;
  /// draws with w already in the tree are discarded and repeated. Stops
  /// early when no tree vertex has a neighbor outside the tree.
  DiffusionTree sample(VertexId source, std::uint32_t target_size, Rng& rng);

private:
  const Graph* g_;
  std::uint32_t epoch_ = 0;
  std::vector<std::uint32_t> stamp_;           // in tree iff stamp_[v] == epoch_
  std::vector<std::uint32_t> outside_degree_;  // neighbors of v not yet in tree
};

DiffusionTree sample_diffusion_tree(const Graph& g, VertexId source,
                                    std::uint32_t target_size, Rng& rng);

/// Closed Euler walk of the edge-doubled tree: starts and ends at the
/// source, visits child subtrees in edge insertion order, emits each vertex
/// on entry and on each return. Length is 2*(k-1)+1 for a k-vertex tree.
VertexSequence euler_sequence(const DiffusionTree& tree);

/// First-order uniform random walk of at most `length` vertices; stops
/// early at a vertex with no neighbors. Benchmark comparator only.
VertexSequence random_walk_baseline(const Graph& g, VertexId source,
                                    std::uint32_t length, Rng& rng);

/// Samples `replicates` diffusion trees per vertex and emits their Euler
/// sequences, ordered by (source, replicate). The random stream of task
/// (v, i) is derived from (seed, v, i), so the corpus is byte-identical
/// for any worker count.
Corpus generate_corpus(const Graph& g, const CorpusParams& params);

struct WalkCorpusParams {
  std::uint32_t walk_length = 79;
  std::uint32_t walks_per_source = 10;
  std::uint64_t seed = 1;
  std::uint32_t workers = 1;
};

/// Random-walk counterpart of generate_corpus, with the same task ordering
/// and determinism guarantees. Benchmark comparator only.
Corpus generate_walk_corpus(const Graph& g, const WalkCorpusParams& params);

} // namespace graphembed
