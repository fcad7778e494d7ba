#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "graphembed/features.hpp"
#include "graphembed/huffman.hpp"
#include "graphembed/matrix.hpp"

namespace graphembed {

inline double sigmoid(double x) {
  if (x >= 0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

/// log(1 + exp(x)) without overflow.
inline double log1p_exp(double x) {
  if (x > 0) return x + std::log1p(std::exp(-x));
  return std::log1p(std::exp(x));
}

/// One-hidden-layer network state: W_in rows are the node embeddings, and
/// each relative position r in {-w..-1,+1..+w} owns an (n-1) x d matrix of
/// hierarchical-softmax inner-node vectors (one shared tree topology).
class EmbeddingModel {
public:
  EmbeddingModel(std::uint32_t vertex_count, std::uint32_t dim, std::uint32_t window);

  std::uint32_t vertex_count() const { return n_; }
  std::uint32_t dim() const { return dim_; }
  std::uint32_t window() const { return window_; }
  std::uint32_t inner_count() const { return n_ - 1; }
  std::uint32_t block_count() const { return 2 * window_; }

  /// Row v of W_in: the embedding X_v.
  std::span<double> embedding(VertexId v) { return w_in_.row(v); }
  std::span<const double> embedding(VertexId v) const { return w_in_.row(v); }

  /// Inner-node vector `inner` of position block `block`.
  std::span<double> inner_vector(std::uint32_t block, std::uint32_t inner) {
    return w_out_.row(inner_row(block, inner));
  }
  std::span<const double> inner_vector(std::uint32_t block, std::uint32_t inner) const {
    return w_out_.row(inner_row(block, inner));
  }

  RowMatrix& w_in() { return w_in_; }
  const RowMatrix& w_in() const { return w_in_; }

private:
  std::uint32_t inner_row(std::uint32_t block, std::uint32_t inner) const;

  std::uint32_t n_;
  std::uint32_t dim_;
  std::uint32_t window_;
  RowMatrix w_in_;   // n x d
  RowMatrix w_out_;  // (2w * (n-1)) x d, rows grouped by position block
};

struct TrainConfig {
  std::uint32_t dim = 128;
  std::uint32_t epochs = 5;
  double alpha0 = 0.025;
  double alpha_min = 0.025e-4;
  std::uint32_t workers = 1;
  std::uint64_t seed = 1;
};

struct TrainStats {
  std::vector<double> epoch_seconds;
  std::vector<double> epoch_mean_loss;
  std::uint64_t events_per_epoch = 0;
};

/// -log p_r(u|v) under the model, where p_r(u|v) is the product of sigmoid
/// branch probabilities along u's Huffman path in position block r.
double pair_log_loss(const EmbeddingModel& model, const HuffmanTree& tree,
                     VertexId center, std::int32_t offset, VertexId context);

/// One SGD step on -log p_r(u|v): updates W_in[center] and the inner-node
/// rows on u's path in block r, all from pre-update values. Returns the
/// pre-update loss.
double pair_update(EmbeddingModel& model, const HuffmanTree& tree, VertexId center,
                   std::int32_t offset, VertexId context, double alpha);

/// Trains from co-occurrence counts: W_in initialized uniformly in
/// [-0.5/d, 0.5/d], W_out zero; the Huffman tree is built from corpus
/// vertex frequencies; each cross-vertex count expands into that many
/// (v,r,u) events (self co-occurrences are dropped), reshuffled per epoch
/// with a seeded permutation; the learning rate decays linearly from
/// alpha0 to alpha_min over all scheduled events. With workers > 1 updates
/// are applied hogwild-style (lock-free, racy); workers = 1 is sequential
/// and deterministic under a fixed seed.
EmbeddingModel train(const CooccurrenceCounts& counts, const TrainConfig& cfg,
                     std::span<const std::uint64_t> corpus_vertex_counts,
                     TrainStats* stats = nullptr);

} // namespace graphembed
