#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace graphembed {

/// Binary prefix-code tree over n leaves (vertices), built by greedy
/// Huffman merge on frequencies. Inner nodes are numbered 0..n-2 in
/// creation order; the root is n-2. For each leaf the stored path runs
/// root -> leaf parent, and code bit j is the branch taken below path
/// node j (0 = lower-keyed child, 1 = higher).
class HuffmanTree {
public:
  std::uint32_t leaf_count() const { return leaf_count_; }
  std::uint32_t inner_count() const { return inner_count_; }

  std::span<const std::uint32_t> path(std::uint32_t leaf) const {
    return {path_.data() + offsets_[leaf], offsets_[leaf + 1] - offsets_[leaf]};
  }
  std::span<const std::uint8_t> code(std::uint32_t leaf) const {
    return {code_.data() + offsets_[leaf], offsets_[leaf + 1] - offsets_[leaf]};
  }
  std::uint32_t code_length(std::uint32_t leaf) const {
    return static_cast<std::uint32_t>(offsets_[leaf + 1] - offsets_[leaf]);
  }

private:
  friend HuffmanTree build_huffman_tree(std::span<const std::uint64_t> frequencies);

  std::uint32_t leaf_count_ = 0;
  std::uint32_t inner_count_ = 0;
  std::vector<std::size_t> offsets_; // leaf_count+1
  std::vector<std::uint32_t> path_;  // inner node ids, root->parent per leaf
  std::vector<std::uint8_t> code_;   // branch bits aligned with path_
};

/// Builds the tree from per-vertex frequencies (zero counts are treated as
/// one). Merging is by ascending (frequency, node index) where leaves take
/// indices 0..n-1 and merged nodes continue from n in creation order, so
/// the result is deterministic. Requires at least 2 vertices.
HuffmanTree build_huffman_tree(std::span<const std::uint64_t> frequencies);

} // namespace graphembed
