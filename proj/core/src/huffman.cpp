#include "graphembed/huffman.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace graphembed {

HuffmanTree build_huffman_tree(std::span<const std::uint64_t> frequencies) {
  const std::uint32_t n = static_cast<std::uint32_t>(frequencies.size());
  if (n < 2) {
    throw std::invalid_argument("huffman tree needs at least 2 vertices");
  }

  // Two-queue merge: leaves sorted ascending by (freq, id), merged nodes
  // appear in creation order with non-decreasing frequencies.
  std::vector<std::uint32_t> leaf_order(n);
  std::iota(leaf_order.begin(), leaf_order.end(), 0u);
  auto freq_of = [&](std::uint32_t v) -> std::uint64_t {
    return frequencies[v] == 0 ? 1 : frequencies[v];
  };
  std::sort(leaf_order.begin(), leaf_order.end(), [&](std::uint32_t a, std::uint32_t b) {
    const std::uint64_t fa = freq_of(a), fb = freq_of(b);
    return fa != fb ? fa < fb : a < b;
  });

  const std::uint32_t node_count = 2 * n - 1; // leaves 0..n-1, merged n..2n-2
  std::vector<std::uint64_t> node_freq(node_count, 0);
  std::vector<std::uint32_t> parent(node_count, 0);
  std::vector<std::uint8_t> branch(node_count, 0);
  for (std::uint32_t v = 0; v < n; ++v) node_freq[v] = freq_of(v);

  std::size_t leaf_head = 0;
  std::uint32_t merged_head = n;
  std::uint32_t next_merged = n;
  auto pop_min = [&]() -> std::uint32_t {
    const bool leaf_ok = leaf_head < n;
    const bool merged_ok = merged_head < next_merged;
    std::uint32_t pick;
    if (leaf_ok && merged_ok) {
      const std::uint32_t lf = leaf_order[leaf_head];
      // leaf wins ties: its node index is always below any merged node's
      pick = node_freq[lf] <= node_freq[merged_head] ? lf : merged_head;
    } else {
      pick = leaf_ok ? leaf_order[leaf_head] : merged_head;
    }
    if (pick < n) ++leaf_head; else ++merged_head;
    return pick;
  };

  for (std::uint32_t step = 0; step < n - 1; ++step) {
    const std::uint32_t first = pop_min();
    const std::uint32_t second = pop_min();
    const std::uint32_t merged = next_merged++;
    node_freq[merged] = node_freq[first] + node_freq[second];
    parent[first] = merged;
    parent[second] = merged;
    branch[second] = 1;
  }
  const std::uint32_t root = node_count - 1;

  HuffmanTree tree;
  tree.leaf_count_ = n;
  tree.inner_count_ = n - 1;
  tree.offsets_.assign(n + 1, 0);
  for (std::uint32_t v = 0; v < n; ++v) {
    std::uint32_t len = 0;
    for (std::uint32_t node = v; node != root; node = parent[node]) ++len;
    tree.offsets_[v + 1] = len;
  }
  for (std::uint32_t v = 0; v < n; ++v) tree.offsets_[v + 1] += tree.offsets_[v];
  tree.path_.resize(tree.offsets_[n]);
  tree.code_.resize(tree.offsets_[n]);
  for (std::uint32_t v = 0; v < n; ++v) {
    // Walk leaf -> root, writing entries back to front so the stored path
    // runs root -> leaf parent. path_[j] is the inner node whose branch
    // decision is code_[j]; inner ids are merged-node ids minus n.
    std::size_t pos = tree.offsets_[v + 1];
    for (std::uint32_t node = v; node != root; node = parent[node]) {
      --pos;
      tree.code_[pos] = branch[node];
      tree.path_[pos] = parent[node] - n;
    }
  }
  return tree;
}

} // namespace graphembed
