#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "graphembed/graph.hpp"
#include "graphembed/matrix.hpp"

namespace graphembed {

struct DistancePair {
  VertexId u = 0;
  VertexId v = 0;
  std::int32_t graph_distance = 0;  // >= 1, disconnected pairs excluded
  double embedding_distance = 0.0;
};

/// Scale minimizing sum_p |d_p - gamma*e_p| / d_p. Computed exactly as the
/// weighted median of breakpoints d_p/e_p with weights e_p/d_p; pairs with
/// zero embedding distance contribute a constant and are excluded. Among
/// minimizing medians the smallest breakpoint is returned. Throws if no
/// usable pair remains.
double fit_gamma(std::span<const DistancePair> pairs);

struct DistortionReport {
  double gamma = 0.0;
  std::uint64_t pair_count = 0;
  std::map<double, double> cdf;  // threshold -> fraction of pairs with error <= threshold
  double median_error = 0.0;
  std::vector<double> errors;    // per pair, same order as `pairs`
  std::vector<DistancePair> pairs;
};

inline constexpr double kDistortionThresholds[] = {0.1, 0.2, 0.3, 0.5};

/// Samples `num_sources` distinct source vertices (clamped to n), BFS from
/// each, pairs every source with each reachable target, fits gamma once
/// over all pairs, and reports relative errors |d - gamma*e| / d with their
/// CDF at the standard thresholds. Throws if no usable pair exists.
DistortionReport distortion_report(const Graph& g, const RowMatrix& embedding,
                                   std::uint32_t num_sources, std::uint64_t seed);

struct ClusterAssignment {
  std::vector<std::uint32_t> assignment;  // per vertex, in 0..k-1
  std::uint32_t k = 0;
};

struct KMeansResult {
  ClusterAssignment clusters;
  double wcss = 0.0;
  std::vector<double> wcss_history;  // per Lloyd iteration of the best run
};

/// k-means++ seeding plus Lloyd iterations until assignments stabilize or
/// max_iters; empty clusters are reseeded to the point farthest from its
/// centroid; best of `restarts` runs by within-cluster sum of squares
/// (ties keep the earliest restart).
KMeansResult kmeans(const RowMatrix& points, std::uint32_t k, std::uint32_t max_iters,
                    std::uint32_t restarts, std::uint64_t seed);

/// Newman modularity Q = sum_c (e_c - a_c^2) with e_c the intra-cluster
/// edge fraction and a_c the cluster degree fraction. Throws on edgeless
/// graphs and on assignments not covering every vertex.
double modularity(const Graph& g, const ClusterAssignment& clusters);

} // namespace graphembed
