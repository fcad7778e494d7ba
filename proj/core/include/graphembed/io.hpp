#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "graphembed/diffusion.hpp"
#include "graphembed/evaluation.hpp"
#include "graphembed/features.hpp"
#include "graphembed/graph.hpp"
#include "graphembed/matrix.hpp"

namespace graphembed {
namespace io {

/// Writes content to a temp file in the target directory, then renames it
/// into place, so failed runs leave no partial output.
void write_text_atomic(const std::filesystem::path& path, std::string_view content);

/// Embedding CSV: header `id,x_0,...,x_{d-1}`, one row per vertex with its
/// original label, values with 6 significant digits.
std::string format_embedding_csv(const std::vector<std::string>& labels,
                                 const RowMatrix& embedding);
void write_embedding_csv(const std::filesystem::path& path,
                         const std::vector<std::string>& labels,
                         const RowMatrix& embedding);

struct NamedEmbedding {
  std::vector<std::string> labels;
  RowMatrix matrix;
};

NamedEmbedding read_embedding_csv(const std::filesystem::path& path);

/// Reorders CSV rows to graph vertex ids. Throws naming the first graph
/// label missing from the CSV, or the first CSV label unknown to the graph.
RowMatrix align_embedding(const Graph& g, const NamedEmbedding& embedding);

/// One sequence per line, space-separated original vertex labels.
std::string format_corpus(const Corpus& corpus, const Graph& g);

/// Per-vertex dense hitting frequency vectors: label then 2*w*n counts.
std::string format_features_csv(const CooccurrenceCounts& counts, const Graph& g);

/// Per-vertex cluster ids: header `id,cluster`.
std::string format_cluster_csv(const Graph& g, const ClusterAssignment& clusters);

} // namespace io
} // namespace graphembed
