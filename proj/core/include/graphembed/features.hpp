#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "graphembed/diffusion.hpp"

namespace graphembed {

/// Maps a relative position r in {-w..-1, +1..+w} to a block index in
/// 0..2w-1: negative offsets ascending first, then positive ascending.
/// This order also fixes the layout of dense hitting frequency vectors
/// and of the per-position output matrices.
inline std::uint32_t offset_block_index(std::int32_t r, std::uint32_t window) {
  const std::int32_t w = static_cast<std::int32_t>(window);
  if (r < 0) return static_cast<std::uint32_t>(r + w);
  return static_cast<std::uint32_t>(w + r - 1);
}

/// Sparse windowed positional co-occurrence counts over a corpus:
/// (center v, offset r, context u) -> number of times u appeared exactly r
/// positions away from v. Offsets are in {-w..-1, +1..+w}.
class CooccurrenceCounts {
public:
  struct Entry {
    VertexId center;
    std::int32_t offset;
    VertexId context;
    std::uint64_t count;
  };

  CooccurrenceCounts(std::uint32_t vertex_count, std::uint32_t window);

  void add(VertexId center, std::int32_t offset, VertexId context,
           std::uint64_t count = 1);

  std::uint64_t count(VertexId center, std::int32_t offset, VertexId context) const;

  std::uint32_t vertex_count() const { return n_; }
  std::uint32_t window() const { return window_; }
  std::size_t entry_count() const { return map_.size(); }
  std::uint64_t total() const { return total_; }
  bool empty() const { return map_.empty(); }

  /// Entries in canonical (center, offset block, context) order. Training
  /// consumes this so results do not depend on hash-map iteration order.
  std::vector<Entry> sorted_entries() const;

  /// Dense hitting frequency vector of v: 2*w*n components, blocks ordered
  /// y_{v,-w}, ..., y_{v,-1}, y_{v,+1}, ..., y_{v,+w}, each indexed by
  /// context vertex id.
  std::vector<std::uint64_t> hitting_frequency_vector(VertexId v) const;

private:
  std::uint64_t key(VertexId center, std::int32_t offset, VertexId context) const;
  void check(VertexId center, std::int32_t offset, VertexId context) const;

  std::uint32_t n_;
  std::uint32_t window_;
  std::uint64_t total_ = 0;
  std::unordered_map<std::uint64_t, std::uint64_t> map_;
};

/// Counts, for every sequence position i and offset r with |r| <= window
/// and r != 0, the pair (s[i], r, s[i+r]) whenever i+r is in bounds.
CooccurrenceCounts extract_cooccurrences(const Corpus& corpus,
                                         std::uint32_t window,
                                         std::uint32_t vertex_count);

} // namespace graphembed
