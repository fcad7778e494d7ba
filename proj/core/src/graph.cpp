#include "graphembed/graph.hpp"

#include <algorithm>
#include <fstream>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace graphembed {

namespace {

bool is_comment_or_blank(std::string_view line) {
  for (char c : line) {
    if (c == ' ' || c == '\t' || c == '\r') continue;
    return c == '#' || c == '%';
  }
  return true;
}

void split_tokens(std::string_view line, std::vector<std::string_view>& out) {
  out.clear();
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
}

} // namespace

Graph Graph::from_edge_list_text(std::string_view text) {
  std::vector<std::string> labels;
  detail::LabelMap ids;
  std::vector<std::pair<VertexId, VertexId>> edges;

  auto intern = [&](std::string_view token) -> VertexId {
    auto it = ids.find(token);
    if (it != ids.end()) return it->second;
    VertexId id = static_cast<VertexId>(labels.size());
    labels.emplace_back(token);
    ids.emplace(labels.back(), id);
    return id;
  };

  std::size_t line_no = 0;
  std::size_t pos = 0;
  std::vector<std::string_view> tokens;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos
                                                 ? text.size() - pos
                                                 : eol - pos);
    ++line_no;
    if (!is_comment_or_blank(line)) {
      split_tokens(line, tokens);
      if (tokens.size() != 2) {
        throw std::runtime_error("edge list parse error at line " +
                                 std::to_string(line_no) + ": expected 2 tokens, got " +
                                 std::to_string(tokens.size()));
      }
      VertexId u = intern(tokens[0]);
      VertexId v = intern(tokens[1]);
      edges.emplace_back(u, v);
    }
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }

  if (labels.empty()) {
    throw std::runtime_error("edge list is empty: no vertices found");
  }
  return build(std::move(labels), std::move(edges));
}

Graph Graph::from_edge_list_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open edge list file: " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_edge_list_text(buf.str());
}

Graph Graph::from_edges(std::uint32_t n,
                        std::span<const std::pair<VertexId, VertexId>> edges) {
  std::vector<std::string> labels(n);
  for (std::uint32_t i = 0; i < n; ++i) labels[i] = std::to_string(i);
  std::vector<std::pair<VertexId, VertexId>> copy(edges.begin(), edges.end());
  for (auto& [u, v] : copy) {
    if (u >= n || v >= n) throw std::invalid_argument("from_edges: vertex id out of range");
  }
  return build(std::move(labels), std::move(copy));
}

Graph Graph::build(std::vector<std::string> labels,
                   std::vector<std::pair<VertexId, VertexId>> edges) {
  Graph g;
  g.n_ = static_cast<std::uint32_t>(labels.size());
  g.labels_ = std::move(labels);
  g.label_to_id_.reserve(g.n_);
  for (VertexId v = 0; v < g.n_; ++v) g.label_to_id_.emplace(g.labels_[v], v);

  // Normalize: drop self-loops, orient u < v, dedupe.
  std::erase_if(edges, [](const auto& e) { return e.first == e.second; });
  for (auto& [u, v] : edges) {
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  g.m_ = edges.size();

  std::vector<std::uint32_t> deg(g.n_, 0);
  for (const auto& [u, v] : edges) {
    ++deg[u];
    ++deg[v];
  }
  g.offsets_.assign(g.n_ + 1, 0);
  for (VertexId v = 0; v < g.n_; ++v) g.offsets_[v + 1] = g.offsets_[v] + deg[v];
  g.adjacency_.resize(g.offsets_[g.n_]);
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& [u, v] : edges) {
    g.adjacency_[cursor[u]++] = v;
    g.adjacency_[cursor[v]++] = u;
  }
  for (VertexId v = 0; v < g.n_; ++v) {
    std::sort(g.adjacency_.begin() + g.offsets_[v],
              g.adjacency_.begin() + g.offsets_[v + 1]);
  }
  return g;
}

std::optional<VertexId> Graph::id_of(std::string_view label) const {
  auto it = label_to_id_.find(label);
  if (it == label_to_id_.end()) return std::nullopt;
  return it->second;
}

void Graph::check_vertex(VertexId v) const {
  if (v >= n_) {
    throw std::out_of_range("vertex id " + std::to_string(v) + " out of range (n=" +
                            std::to_string(n_) + ")");
  }
}

std::vector<std::int32_t> Graph::bfs_distances(VertexId source) const {
  check_vertex(source);
  std::vector<std::int32_t> dist(n_, -1);
  std::vector<VertexId> queue;
  queue.reserve(64);
  dist[source] = 0;
  queue.push_back(source);
  std::size_t head = 0;
  while (head < queue.size()) {
    VertexId u = queue[head++];
    std::int32_t du = dist[u];
    for (VertexId w : neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = du + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::vector<VertexId> Graph::component_of(VertexId v) const {
  auto dist = bfs_distances(v);
  std::vector<VertexId> out;
  for (VertexId u = 0; u < n_; ++u) {
    if (dist[u] >= 0) out.push_back(u);
  }
  return out;
}

} // namespace graphembed
