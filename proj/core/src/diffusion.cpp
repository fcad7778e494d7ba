#include "graphembed/diffusion.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace graphembed {

std::vector<std::pair<VertexId, VertexId>> DiffusionTree::edges() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  out.reserve(parent_pos.size());
  for (std::size_t i = 0; i < parent_pos.size(); ++i) {
    out.emplace_back(vertices[parent_pos[i]], vertices[i + 1]);
  }
  return out;
}

DiffusionSampler::DiffusionSampler(const Graph& g)
    : g_(&g),
      stamp_(g.vertex_count(), 0),
      outside_degree_(g.vertex_count(), 0) {}

DiffusionTree DiffusionSampler::sample(VertexId source, std::uint32_t target_size,
                                       Rng& rng) {
  if (target_size == 0) {
    throw std::invalid_argument("diffusion tree target size must be >= 1");
  }
  if (source >= g_->vertex_count()) {
    throw std::out_of_range("diffusion source vertex out of range");
  }
  if (++epoch_ == 0) { // stamp counter wrapped, start fresh
    std::fill(stamp_.begin(), stamp_.end(), 0);
    epoch_ = 1;
  }

  DiffusionTree tree;
  tree.source = source;
  tree.vertices.push_back(source);
  stamp_[source] = epoch_;
  outside_degree_[source] = g_->degree(source);
  std::uint32_t expandable = outside_degree_[source] > 0 ? 1 : 0;

  while (tree.vertices.size() < target_size && expandable > 0) {
    const std::uint32_t upos = rng.next_below(static_cast<std::uint32_t>(tree.vertices.size()));
    const VertexId u = tree.vertices[upos];
    const auto nbrs = g_->neighbors(u);
    const VertexId w = nbrs[rng.next_below(static_cast<std::uint32_t>(nbrs.size()))];
    if (stamp_[w] == epoch_) continue; // w already in tree: discard the draw

    stamp_[w] = epoch_;
    std::uint32_t outside = 0;
    for (VertexId x : g_->neighbors(w)) {
      if (stamp_[x] == epoch_) {
        if (--outside_degree_[x] == 0) --expandable;
      } else {
        ++outside;
      }
    }
    outside_degree_[w] = outside;
    if (outside > 0) ++expandable;
    tree.vertices.push_back(w);
    tree.parent_pos.push_back(upos);
  }
  return tree;
}

DiffusionTree sample_diffusion_tree(const Graph& g, VertexId source,
                                    std::uint32_t target_size, Rng& rng) {
  DiffusionSampler sampler(g);
  return sampler.sample(source, target_size, rng);
}

VertexSequence euler_sequence(const DiffusionTree& tree) {
  const std::size_t k = tree.vertices.size();
  VertexSequence seq;
  if (k == 0) return seq;
  seq.reserve(2 * (k - 1) + 1);
  seq.push_back(tree.vertices[0]);
  if (k == 1) return seq;

  // Child lists over tree positions, in edge insertion order.
  std::vector<std::uint32_t> child_begin(k + 1, 0);
  for (std::uint32_t p : tree.parent_pos) ++child_begin[p + 1];
  for (std::size_t i = 1; i <= k; ++i) child_begin[i] += child_begin[i - 1];
  std::vector<std::uint32_t> children(k - 1);
  std::vector<std::uint32_t> cursor(child_begin.begin(), child_begin.end() - 1);
  for (std::size_t i = 0; i < tree.parent_pos.size(); ++i) {
    children[cursor[tree.parent_pos[i]]++] = static_cast<std::uint32_t>(i + 1);
  }

  std::copy(child_begin.begin(), child_begin.end() - 1, cursor.begin());
  std::vector<std::uint32_t> stack;
  stack.push_back(0);
  while (!stack.empty()) {
    const std::uint32_t pos = stack.back();
    if (cursor[pos] < child_begin[pos + 1]) {
      const std::uint32_t child = children[cursor[pos]++];
      seq.push_back(tree.vertices[child]);
      stack.push_back(child);
    } else {
      stack.pop_back();
      if (!stack.empty()) seq.push_back(tree.vertices[stack.back()]);
    }
  }
  return seq;
}

VertexSequence random_walk_baseline(const Graph& g, VertexId source,
                                    std::uint32_t length, Rng& rng) {
  if (length == 0) throw std::invalid_argument("walk length must be >= 1");
  if (source >= g.vertex_count()) {
    throw std::out_of_range("walk source vertex out of range");
  }
  VertexSequence walk;
  walk.reserve(length);
  VertexId current = source;
  walk.push_back(current);
  while (walk.size() < length) {
    const auto nbrs = g.neighbors(current);
    if (nbrs.empty()) break;
    current = nbrs[rng.next_below(static_cast<std::uint32_t>(nbrs.size()))];
    walk.push_back(current);
  }
  return walk;
}

namespace {

// Runs tasks (source, replicate) across workers; each task writes its own
// corpus slot, so the result does not depend on scheduling.
template <typename TaskFn>
Corpus run_corpus_tasks(const Graph& g, std::uint32_t replicates, std::uint32_t workers,
                        TaskFn&& task) {
  const std::uint32_t n = g.vertex_count();
  const std::size_t total = static_cast<std::size_t>(n) * replicates;
  Corpus corpus;
  corpus.sequences.resize(total);
  corpus.vertex_counts.assign(n, 0);

  const std::uint32_t pool_size =
      static_cast<std::uint32_t>(std::min<std::size_t>(workers, std::max<std::size_t>(total, 1)));
  std::atomic<std::size_t> next_task{0};
  std::exception_ptr error;
  std::mutex error_mutex;

  auto run = [&]() {
    try {
      DiffusionSampler sampler(g);
      while (true) {
        const std::size_t t = next_task.fetch_add(1, std::memory_order_relaxed);
        if (t >= total) break;
        const VertexId v = static_cast<VertexId>(t / replicates);
        const std::uint32_t rep = static_cast<std::uint32_t>(t % replicates);
        corpus.sequences[t] = task(sampler, v, rep);
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  };

  if (pool_size == 1) {
    run();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(pool_size);
    for (std::uint32_t w = 0; w < pool_size; ++w) pool.emplace_back(run);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);

  for (const auto& seq : corpus.sequences) {
    for (VertexId v : seq) ++corpus.vertex_counts[v];
  }
  return corpus;
}

// Keeps baseline-walk streams uncorrelated with diffusion streams that use
// the same (seed, source, replicate).
constexpr std::uint64_t kWalkStreamTag = 0x57616c6bULL;

} // namespace

Corpus generate_corpus(const Graph& g, const CorpusParams& params) {
  if (params.tree_size == 0) throw std::invalid_argument("tree_size must be >= 1");
  if (params.replicates == 0) throw std::invalid_argument("replicates must be >= 1");
  if (params.workers == 0) throw std::invalid_argument("workers must be >= 1");

  return run_corpus_tasks(
      g, params.replicates, params.workers,
      [&](DiffusionSampler& sampler, VertexId v, std::uint32_t rep) {
        Rng rng = Rng::for_task(params.seed, v, rep);
        return euler_sequence(sampler.sample(v, params.tree_size, rng));
      });
}

Corpus generate_walk_corpus(const Graph& g, const WalkCorpusParams& params) {
  if (params.walk_length == 0) throw std::invalid_argument("walk_length must be >= 1");
  if (params.walks_per_source == 0) {
    throw std::invalid_argument("walks_per_source must be >= 1");
  }
  if (params.workers == 0) throw std::invalid_argument("workers must be >= 1");

  return run_corpus_tasks(
      g, params.walks_per_source, params.workers,
      [&](DiffusionSampler&, VertexId v, std::uint32_t rep) {
        Rng rng = Rng::for_task(params.seed ^ kWalkStreamTag, v, rep);
        return random_walk_baseline(g, v, params.walk_length, rng);
      });
}

} // namespace graphembed
