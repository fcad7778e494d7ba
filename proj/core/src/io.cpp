#include "graphembed/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace graphembed {
namespace io {

void write_text_atomic(const std::filesystem::path& path, std::string_view content) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open for writing: " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) {
      out.close();
      std::filesystem::remove(tmp);
      throw std::runtime_error("write failed: " + tmp.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw std::runtime_error("rename failed for " + path.string() + ": " + ec.message());
  }
}

std::string format_embedding_csv(const std::vector<std::string>& labels,
                                 const RowMatrix& embedding) {
  if (labels.size() != embedding.rows) {
    throw std::invalid_argument("label count does not match embedding rows");
  }
  std::string out;
  out.reserve(static_cast<std::size_t>(embedding.rows) * (embedding.cols + 1) * 12);
  out += "id";
  for (std::uint32_t t = 0; t < embedding.cols; ++t) {
    out += ",x_";
    out += std::to_string(t);
  }
  out += '\n';
  char buf[64];
  for (std::uint32_t v = 0; v < embedding.rows; ++v) {
    out += labels[v];
    for (double x : embedding.row(v)) {
      std::snprintf(buf, sizeof(buf), ",%.6g", x);
      out += buf;
    }
    out += '\n';
  }
  return out;
}

void write_embedding_csv(const std::filesystem::path& path,
                         const std::vector<std::string>& labels,
                         const RowMatrix& embedding) {
  write_text_atomic(path, format_embedding_csv(labels, embedding));
}

NamedEmbedding read_embedding_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open embedding CSV: " + path.string());

  auto split = [](const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = line.find(',', start);
      if (comma == std::string::npos) {
        fields.push_back(line.substr(start));
        break;
      }
      fields.push_back(line.substr(start, comma - start));
      start = comma + 1;
    }
    if (!fields.empty() && !fields.back().empty() && fields.back().back() == '\r') {
      fields.back().pop_back();
    }
    return fields;
  };

  std::string line;
  if (!std::getline(in, line)) {
    throw std::runtime_error("embedding CSV is empty: " + path.string());
  }
  const auto header = split(line);
  if (header.size() < 2 || header[0] != "id") {
    throw std::runtime_error("embedding CSV has an invalid header: " + path.string());
  }
  const std::uint32_t dim = static_cast<std::uint32_t>(header.size() - 1);

  NamedEmbedding result;
  std::vector<double> values;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    const auto fields = split(line);
    if (fields.size() != dim + 1) {
      throw std::runtime_error("embedding CSV line " + std::to_string(line_no) +
                               ": expected " + std::to_string(dim + 1) + " fields, got " +
                               std::to_string(fields.size()));
    }
    result.labels.push_back(fields[0]);
    for (std::uint32_t t = 1; t <= dim; ++t) {
      char* end = nullptr;
      const double x = std::strtod(fields[t].c_str(), &end);
      if (end == fields[t].c_str() || *end != '\0') {
        throw std::runtime_error("embedding CSV line " + std::to_string(line_no) +
                                 ": bad number '" + fields[t] + "'");
      }
      values.push_back(x);
    }
  }
  if (result.labels.empty()) {
    throw std::runtime_error("embedding CSV has no data rows: " + path.string());
  }
  result.matrix = RowMatrix(static_cast<std::uint32_t>(result.labels.size()), dim);
  result.matrix.data = std::move(values);
  return result;
}

RowMatrix align_embedding(const Graph& g, const NamedEmbedding& embedding) {
  std::unordered_map<std::string, std::uint32_t> row_of;
  row_of.reserve(embedding.labels.size());
  for (std::uint32_t r = 0; r < embedding.labels.size(); ++r) {
    if (!row_of.emplace(embedding.labels[r], r).second) {
      throw std::runtime_error("embedding CSV has a duplicate label: '" +
                               embedding.labels[r] + "'");
    }
    if (!g.id_of(embedding.labels[r])) {
      throw std::runtime_error("embedding label not present in graph: '" +
                               embedding.labels[r] + "'");
    }
  }
  RowMatrix aligned(g.vertex_count(), embedding.matrix.cols);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const auto it = row_of.find(g.label(v));
    if (it == row_of.end()) {
      throw std::runtime_error("graph vertex missing from embedding: '" + g.label(v) + "'");
    }
    const auto src = embedding.matrix.row(it->second);
    std::copy(src.begin(), src.end(), aligned.row(v).begin());
  }
  return aligned;
}

std::string format_corpus(const Corpus& corpus, const Graph& g) {
  std::string out;
  for (const auto& seq : corpus.sequences) {
    for (std::size_t i = 0; i < seq.size(); ++i) {
      if (i) out += ' ';
      out += g.label(seq[i]);
    }
    out += '\n';
  }
  return out;
}

std::string format_features_csv(const CooccurrenceCounts& counts, const Graph& g) {
  const std::uint32_t n = counts.vertex_count();
  const std::uint64_t width = 2ULL * counts.window() * n;
  std::vector<std::uint64_t> row(width, 0);
  std::string out;
  const auto entries = counts.sorted_entries(); // grouped by center
  std::size_t idx = 0;
  for (VertexId v = 0; v < n; ++v) {
    std::fill(row.begin(), row.end(), 0);
    while (idx < entries.size() && entries[idx].center == v) {
      const auto& e = entries[idx++];
      row[static_cast<std::uint64_t>(offset_block_index(e.offset, counts.window())) * n +
          e.context] = e.count;
    }
    out += g.label(v);
    for (std::uint64_t c : row) {
      out += ',';
      out += std::to_string(c);
    }
    out += '\n';
  }
  return out;
}

std::string format_cluster_csv(const Graph& g, const ClusterAssignment& clusters) {
  std::string out = "id,cluster\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    out += g.label(v);
    out += ',';
    out += std::to_string(clusters.assignment[v]);
    out += '\n';
  }
  return out;
}

} // namespace io
} // namespace graphembed
