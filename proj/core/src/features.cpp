#include "graphembed/features.hpp"

#include <algorithm>
#include <stdexcept>

namespace graphembed {

CooccurrenceCounts::CooccurrenceCounts(std::uint32_t vertex_count, std::uint32_t window)
    : n_(vertex_count), window_(window) {
  if (window == 0) throw std::invalid_argument("window must be >= 1");
  if (vertex_count == 0) throw std::invalid_argument("vertex count must be >= 1");
}

std::uint64_t CooccurrenceCounts::key(VertexId center, std::int32_t offset,
                                      VertexId context) const {
  const std::uint64_t block = offset_block_index(offset, window_);
  return (static_cast<std::uint64_t>(center) * (2ULL * window_) + block) * n_ + context;
}

void CooccurrenceCounts::check(VertexId center, std::int32_t offset,
                               VertexId context) const {
  if (center >= n_ || context >= n_) {
    throw std::out_of_range("co-occurrence vertex id out of range");
  }
  if (offset == 0 || offset < -static_cast<std::int32_t>(window_) ||
      offset > static_cast<std::int32_t>(window_)) {
    throw std::invalid_argument("offset must be in {-w..-1, +1..+w}");
  }
}

void CooccurrenceCounts::add(VertexId center, std::int32_t offset, VertexId context,
                             std::uint64_t count) {
  check(center, offset, context);
  if (count == 0) return;
  map_[key(center, offset, context)] += count;
  total_ += count;
}

std::uint64_t CooccurrenceCounts::count(VertexId center, std::int32_t offset,
                                        VertexId context) const {
  check(center, offset, context);
  auto it = map_.find(key(center, offset, context));
  return it == map_.end() ? 0 : it->second;
}

std::vector<CooccurrenceCounts::Entry> CooccurrenceCounts::sorted_entries() const {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> keyed(map_.begin(), map_.end());
  std::sort(keyed.begin(), keyed.end());
  std::vector<Entry> out;
  out.reserve(keyed.size());
  const std::int32_t w = static_cast<std::int32_t>(window_);
  for (const auto& [k, c] : keyed) {
    const VertexId context = static_cast<VertexId>(k % n_);
    const std::uint64_t rest = k / n_;
    const std::uint32_t block = static_cast<std::uint32_t>(rest % (2ULL * window_));
    const VertexId center = static_cast<VertexId>(rest / (2ULL * window_));
    const std::int32_t offset = block < window_
                                    ? static_cast<std::int32_t>(block) - w
                                    : static_cast<std::int32_t>(block) - w + 1;
    out.push_back(Entry{center, offset, context, c});
  }
  return out;
}

std::vector<std::uint64_t> CooccurrenceCounts::hitting_frequency_vector(VertexId v) const {
  if (v >= n_) throw std::out_of_range("vertex id out of range");
  std::vector<std::uint64_t> dense(2ULL * window_ * n_, 0);
  const std::uint64_t lo = static_cast<std::uint64_t>(v) * (2ULL * window_) * n_;
  const std::uint64_t hi = lo + 2ULL * window_ * n_;
  for (const auto& [k, c] : map_) {
    if (k >= lo && k < hi) dense[k - lo] = c;
  }
  return dense;
}

CooccurrenceCounts extract_cooccurrences(const Corpus& corpus, std::uint32_t window,
                                         std::uint32_t vertex_count) {
  CooccurrenceCounts counts(vertex_count, window);
  for (const auto& seq : corpus.sequences) {
    const std::size_t len = seq.size();
    for (std::size_t i = 0; i < len; ++i) {
      if (seq[i] >= vertex_count) {
        throw std::out_of_range("sequence vertex id out of range");
      }
      const std::int32_t w = static_cast<std::int32_t>(window);
      for (std::int32_t r = -w; r <= w; ++r) {
        if (r == 0) continue;
        const std::int64_t j = static_cast<std::int64_t>(i) + r;
        if (j < 0 || j >= static_cast<std::int64_t>(len)) continue;
        counts.add(seq[i], r, seq[static_cast<std::size_t>(j)]);
      }
    }
  }
  return counts;
}

} // namespace graphembed
