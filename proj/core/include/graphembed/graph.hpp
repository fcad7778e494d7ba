#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace graphembed {

using VertexId = std::uint32_t;

namespace detail {

// Heterogeneous hashing so label lookups by string_view never allocate.
struct StringHash {
  using is_transparent = void;
  std::size_t operator()(std::string_view s) const noexcept {
    return std::hash<std::string_view>{}(s);
  }
  std::size_t operator()(const std::string& s) const noexcept {
    return std::hash<std::string_view>{}(s);
  }
};

using LabelMap = std::unordered_map<std::string, VertexId, StringHash, std::equal_to<>>;

} // namespace detail

/// Immutable simple undirected graph in compressed adjacency form.
///
/// Vertex labels from the input are remapped to dense ids 0..n-1 in
/// first-appearance order; adjacency lists are sorted. Self-loops are
/// dropped and duplicate edges (in either orientation) collapse to one.
/// Instances are safe for unrestricted concurrent reads.
class Graph {
public:
  /// Parses edge-list text: one edge per line, two whitespace-separated
  /// tokens; empty lines and lines starting with '#' or '%' are ignored.
  /// Throws std::runtime_error on malformed lines (with the line number)
  /// and on input that yields no vertices.
  static Graph from_edge_list_text(std::string_view text);

  static Graph from_edge_list_file(const std::filesystem::path& path);

  /// Builds a graph over ids 0..n-1 directly; labels are the decimal ids.
  /// Applies the same normalization (self-loops dropped, duplicates
  /// collapsed). Used by generators and tests.
  static Graph from_edges(std::uint32_t n,
                          std::span<const std::pair<VertexId, VertexId>> edges);

  std::uint32_t vertex_count() const { return n_; }
  std::uint64_t edge_count() const { return m_; }

  /// Sorted neighbor ids; empty for isolated vertices.
  std::span<const VertexId> neighbors(VertexId v) const {
    check_vertex(v);
    return {adjacency_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }

  std::uint32_t degree(VertexId v) const {
    check_vertex(v);
    return static_cast<std::uint32_t>(offsets_[v + 1] - offsets_[v]);
  }

  const std::string& label(VertexId v) const {
    check_vertex(v);
    return labels_[v];
  }

  std::optional<VertexId> id_of(std::string_view label) const;

  /// Unweighted shortest-path hop counts from source; -1 marks vertices
  /// unreachable from it.
  std::vector<std::int32_t> bfs_distances(VertexId source) const;

  /// Vertices of the connected component containing v, ascending.
  std::vector<VertexId> component_of(VertexId v) const;

private:
  Graph() = default;
  static Graph build(std::vector<std::string> labels,
                     std::vector<std::pair<VertexId, VertexId>> edges);
  void check_vertex(VertexId v) const;

  std::uint32_t n_ = 0;
  std::uint64_t m_ = 0;
  std::vector<std::size_t> offsets_;  // n+1 entries
  std::vector<VertexId> adjacency_;   // 2m entries, sorted per vertex
  std::vector<std::string> labels_;
  detail::LabelMap label_to_id_;
};

} // namespace graphembed
