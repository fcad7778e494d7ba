#include "graphembed/trainer.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <stdexcept>
#include <thread>

#include "graphembed/rng.hpp"

namespace graphembed {

namespace {

// Sub-stream tags so initialization and per-epoch shuffles draw from
// unrelated parts of the seed space.
constexpr std::uint64_t kInitStream = 0x496e6974ULL;
constexpr std::uint64_t kShuffleStream = 0x53687566ULL;

struct TrainEvent {
  VertexId center;
  VertexId context;
  std::int32_t offset;
};

void validate_offset(const EmbeddingModel& model, std::int32_t offset) {
  const std::int32_t w = static_cast<std::int32_t>(model.window());
  if (offset == 0 || offset < -w || offset > w) {
    throw std::invalid_argument("offset must be in {-w..-1, +1..+w}");
  }
}

} // namespace

EmbeddingModel::EmbeddingModel(std::uint32_t vertex_count, std::uint32_t dim,
                               std::uint32_t window)
    : n_(vertex_count), dim_(dim), window_(window) {
  if (vertex_count < 2) throw std::invalid_argument("model needs at least 2 vertices");
  if (dim == 0) throw std::invalid_argument("dimension must be >= 1");
  if (window == 0) throw std::invalid_argument("window must be >= 1");
  w_in_ = RowMatrix(n_, dim_);
  w_out_ = RowMatrix(2 * window_ * (n_ - 1), dim_);
}

std::uint32_t EmbeddingModel::inner_row(std::uint32_t block, std::uint32_t inner) const {
  if (block >= block_count()) throw std::out_of_range("position block out of range");
  if (inner >= inner_count()) throw std::out_of_range("inner node id out of range");
  return block * inner_count() + inner;
}

double pair_log_loss(const EmbeddingModel& model, const HuffmanTree& tree,
                     VertexId center, std::int32_t offset, VertexId context) {
  validate_offset(model, offset);
  const std::uint32_t block = offset_block_index(offset, model.window());
  const auto in = model.embedding(center);
  const auto path = tree.path(context);
  const auto code = tree.code(context);
  double loss = 0.0;
  for (std::size_t j = 0; j < path.size(); ++j) {
    const auto theta = model.inner_vector(block, path[j]);
    double dot = 0.0;
    for (std::uint32_t t = 0; t < model.dim(); ++t) dot += in[t] * theta[t];
    const double sign = code[j] ? -1.0 : 1.0;
    loss += log1p_exp(-sign * dot);
  }
  return loss;
}

double pair_update(EmbeddingModel& model, const HuffmanTree& tree, VertexId center,
                   std::int32_t offset, VertexId context, double alpha) {
  validate_offset(model, offset);
  const std::uint32_t block = offset_block_index(offset, model.window());
  const std::uint32_t dim = model.dim();
  const auto in = model.embedding(center);
  const auto path = tree.path(context);
  const auto code = tree.code(context);

  thread_local std::vector<double> cache;
  cache.assign(dim, 0.0);

  double loss = 0.0;
  for (std::size_t j = 0; j < path.size(); ++j) {
    const auto theta = model.inner_vector(block, path[j]);
    double dot = 0.0;
    for (std::uint32_t t = 0; t < dim; ++t) dot += in[t] * theta[t];
    const double sign = code[j] ? -1.0 : 1.0;
    loss += log1p_exp(-sign * dot);
    const double g = alpha * ((code[j] ? 0.0 : 1.0) - sigmoid(dot));
    for (std::uint32_t t = 0; t < dim; ++t) cache[t] += g * theta[t];
    for (std::uint32_t t = 0; t < dim; ++t) theta[t] += g * in[t];
  }
  for (std::uint32_t t = 0; t < dim; ++t) in[t] += cache[t];
  return loss;
}

EmbeddingModel train(const CooccurrenceCounts& counts, const TrainConfig& cfg,
                     std::span<const std::uint64_t> corpus_vertex_counts,
                     TrainStats* stats) {
  const std::uint32_t n = counts.vertex_count();
  if (n < 2) throw std::invalid_argument("training needs at least 2 vertices");
  if (counts.empty()) throw std::invalid_argument("co-occurrence counts are empty");
  if (cfg.dim == 0) throw std::invalid_argument("dimension must be >= 1");
  if (cfg.epochs == 0) throw std::invalid_argument("epochs must be >= 1");
  if (cfg.workers == 0) throw std::invalid_argument("workers must be >= 1");
  if (!(cfg.alpha_min > 0.0) || !(cfg.alpha_min <= cfg.alpha0)) {
    throw std::invalid_argument("need 0 < alpha_min <= alpha0");
  }
  if (corpus_vertex_counts.size() != n) {
    throw std::invalid_argument("corpus vertex frequency table has wrong size");
  }

  EmbeddingModel model(n, cfg.dim, counts.window());
  Rng init_rng = Rng::for_task(cfg.seed, kInitStream);
  const double half = 0.5 / cfg.dim;
  for (VertexId v = 0; v < n; ++v) {
    for (double& x : model.embedding(v)) x = init_rng.next_double(-half, half);
  }

  const HuffmanTree tree = build_huffman_tree(corpus_vertex_counts);

  std::vector<TrainEvent> events;
  events.reserve(counts.total());
  for (const auto& e : counts.sorted_entries()) {
    // Euler walks revisit a vertex at even offsets constantly; training on
    // self-prediction degrades the embedding geometry, so those events are
    // dropped (word2vec convention).
    if (e.center == e.context) continue;
    for (std::uint64_t c = 0; c < e.count; ++c) {
      events.push_back(TrainEvent{e.center, e.context, e.offset});
    }
  }
  if (events.empty()) {
    throw std::invalid_argument("co-occurrence counts hold no cross-vertex pairs");
  }
  const std::uint64_t per_epoch = events.size();
  const std::uint64_t scheduled = per_epoch * cfg.epochs;
  const double alpha_span = cfg.alpha_min - cfg.alpha0;

  if (stats) {
    stats->epoch_seconds.clear();
    stats->epoch_mean_loss.clear();
    stats->events_per_epoch = per_epoch;
  }

  std::atomic<std::uint64_t> done{0};
  auto alpha_at = [&](std::uint64_t t) {
    return cfg.alpha0 + alpha_span * (static_cast<double>(t) / static_cast<double>(scheduled));
  };

  const std::uint32_t workers = static_cast<std::uint32_t>(
      std::min<std::uint64_t>(cfg.workers, std::max<std::uint64_t>(per_epoch, 1)));

  for (std::uint32_t epoch = 0; epoch < cfg.epochs; ++epoch) {
    Rng shuffle_rng = Rng::for_task(cfg.seed, kShuffleStream, epoch);
    for (std::size_t i = events.size(); i > 1; --i) {
      const std::size_t j = shuffle_rng.next_below(static_cast<std::uint32_t>(i));
      std::swap(events[i - 1], events[j]);
    }

    const auto t0 = std::chrono::steady_clock::now();
    double epoch_loss = 0.0;
    if (workers == 1) {
      for (const TrainEvent& ev : events) {
        const double alpha = alpha_at(done.fetch_add(1, std::memory_order_relaxed));
        epoch_loss += pair_update(model, tree, ev.center, ev.offset, ev.context, alpha);
      }
    } else {
      std::vector<double> worker_loss(workers, 0.0);
      std::vector<std::thread> pool;
      pool.reserve(workers);
      for (std::uint32_t w = 0; w < workers; ++w) {
        const std::size_t begin = static_cast<std::size_t>(per_epoch) * w / workers;
        const std::size_t end = static_cast<std::size_t>(per_epoch) * (w + 1) / workers;
        pool.emplace_back([&, w, begin, end]() {
          double local = 0.0;
          for (std::size_t i = begin; i < end; ++i) {
            const TrainEvent& ev = events[i];
            const double alpha = alpha_at(done.fetch_add(1, std::memory_order_relaxed));
            local += pair_update(model, tree, ev.center, ev.offset, ev.context, alpha);
          }
          worker_loss[w] = local;
        });
      }
      for (auto& t : pool) t.join();
      for (double l : worker_loss) epoch_loss += l;
    }
    const auto t1 = std::chrono::steady_clock::now();

    if (stats) {
      stats->epoch_seconds.push_back(std::chrono::duration<double>(t1 - t0).count());
      stats->epoch_mean_loss.push_back(per_epoch ? epoch_loss / static_cast<double>(per_epoch) : 0.0);
    }
  }
  return model;
}

} // namespace graphembed
