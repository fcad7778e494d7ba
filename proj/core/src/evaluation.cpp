#include "graphembed/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "graphembed/rng.hpp"

namespace graphembed {

namespace {

constexpr std::uint64_t kSourceStream = 0x536f7572ULL;
constexpr std::uint64_t kKmeansStream = 0x4b6d6e73ULL;

double squared_distance(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

} // namespace

double fit_gamma(std::span<const DistancePair> pairs) {
  struct Breakpoint {
    double value;
    double weight;
  };
  std::vector<Breakpoint> bps;
  bps.reserve(pairs.size());
  for (const auto& p : pairs) {
    if (p.graph_distance < 1) {
      throw std::invalid_argument("graph distance must be a positive integer");
    }
    if (p.embedding_distance <= 0.0) continue; // constant error 1, gamma-independent
    const double d = static_cast<double>(p.graph_distance);
    bps.push_back({d / p.embedding_distance, p.embedding_distance / d});
  }
  if (bps.empty()) {
    throw std::runtime_error("gamma fit: no pair with positive embedding distance");
  }
  std::sort(bps.begin(), bps.end(),
            [](const Breakpoint& a, const Breakpoint& b) { return a.value < b.value; });
  double total = 0.0;
  for (const auto& bp : bps) total += bp.weight;
  const double half = total / 2.0;
  double cum = 0.0;
  for (const auto& bp : bps) {
    cum += bp.weight;
    if (cum >= half) return bp.value;
  }
  return bps.back().value; // unreachable barring rounding
}

DistortionReport distortion_report(const Graph& g, const RowMatrix& embedding,
                                   std::uint32_t num_sources, std::uint64_t seed) {
  const std::uint32_t n = g.vertex_count();
  if (embedding.rows != n) {
    throw std::invalid_argument("embedding row count does not match graph");
  }
  if (num_sources == 0) throw std::invalid_argument("num_sources must be >= 1");
  const std::uint32_t count = std::min(num_sources, n);

  // Seeded partial Fisher-Yates: the first `count` entries are the sources.
  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), 0u);
  Rng rng = Rng::for_task(seed, kSourceStream);
  for (std::uint32_t i = 0; i < count; ++i) {
    const std::uint32_t j = i + rng.next_below(n - i);
    std::swap(order[i], order[j]);
  }

  DistortionReport report;
  for (std::uint32_t s = 0; s < count; ++s) {
    const VertexId source = order[s];
    const auto dist = g.bfs_distances(source);
    for (VertexId t = 0; t < n; ++t) {
      if (t == source || dist[t] < 1) continue;
      const double e = std::sqrt(squared_distance(embedding.row(source), embedding.row(t)));
      report.pairs.push_back(DistancePair{source, t, dist[t], e});
    }
  }
  if (report.pairs.empty()) {
    throw std::runtime_error("distortion report: no connected vertex pairs");
  }

  const bool any_positive =
      std::any_of(report.pairs.begin(), report.pairs.end(),
                  [](const DistancePair& p) { return p.embedding_distance > 0.0; });
  report.gamma = any_positive ? fit_gamma(report.pairs) : 0.0;

  report.errors.reserve(report.pairs.size());
  for (const auto& p : report.pairs) {
    const double d = static_cast<double>(p.graph_distance);
    report.errors.push_back(std::abs(d - report.gamma * p.embedding_distance) / d);
  }
  report.pair_count = report.errors.size();

  std::vector<double> sorted = report.errors;
  std::sort(sorted.begin(), sorted.end());
  for (double threshold : kDistortionThresholds) {
    const auto it = std::upper_bound(sorted.begin(), sorted.end(), threshold);
    report.cdf[threshold] =
        static_cast<double>(it - sorted.begin()) / static_cast<double>(sorted.size());
  }
  const std::size_t mid = sorted.size() / 2;
  report.median_error = sorted.size() % 2 == 1
                            ? sorted[mid]
                            : 0.5 * (sorted[mid - 1] + sorted[mid]);
  return report;
}

namespace {

struct LloydState {
  std::vector<double> centroids;          // k x d
  std::vector<std::uint32_t> assignment;  // n
};

double run_lloyd(const RowMatrix& points, std::uint32_t k, std::uint32_t max_iters,
                 Rng& rng, LloydState& state, std::vector<double>* history) {
  const std::uint32_t n = points.rows;
  const std::uint32_t d = points.cols;
  auto centroid = [&](std::uint32_t c) {
    return std::span<double>(state.centroids.data() + static_cast<std::size_t>(c) * d, d);
  };

  // k-means++ seeding.
  state.centroids.assign(static_cast<std::size_t>(k) * d, 0.0);
  {
    const VertexId first = rng.next_below(n);
    std::copy_n(points.row(first).data(), d, centroid(0).data());
    std::vector<double> d2(n);
    for (std::uint32_t i = 0; i < n; ++i) {
      d2[i] = squared_distance(points.row(i), centroid(0));
    }
    for (std::uint32_t c = 1; c < k; ++c) {
      double total = std::accumulate(d2.begin(), d2.end(), 0.0);
      std::uint32_t pick;
      if (total > 0.0) {
        double target = rng.next_double() * total;
        pick = n - 1;
        for (std::uint32_t i = 0; i < n; ++i) {
          target -= d2[i];
          if (target <= 0.0) {
            pick = i;
            break;
          }
        }
      } else {
        pick = rng.next_below(n); // all remaining points coincide with a centroid
      }
      std::copy_n(points.row(pick).data(), d, centroid(c).data());
      for (std::uint32_t i = 0; i < n; ++i) {
        d2[i] = std::min(d2[i], squared_distance(points.row(i), centroid(c)));
      }
    }
  }

  state.assignment.assign(n, 0);
  std::vector<std::uint32_t> previous(n, k); // invalid marker forces first pass
  std::vector<std::uint32_t> sizes(k);
  std::vector<double> sums(static_cast<std::size_t>(k) * d);
  double wcss = 0.0;

  for (std::uint32_t iter = 0; iter < max_iters; ++iter) {
    for (std::uint32_t i = 0; i < n; ++i) {
      double best = std::numeric_limits<double>::infinity();
      std::uint32_t arg = 0;
      for (std::uint32_t c = 0; c < k; ++c) {
        const double dist = squared_distance(points.row(i), centroid(c));
        if (dist < best) {
          best = dist;
          arg = c;
        }
      }
      state.assignment[i] = arg;
    }

    // Reseed empty clusters to the point currently farthest from its centroid.
    std::fill(sizes.begin(), sizes.end(), 0u);
    for (std::uint32_t i = 0; i < n; ++i) ++sizes[state.assignment[i]];
    for (std::uint32_t c = 0; c < k; ++c) {
      if (sizes[c] != 0) continue;
      double worst = -1.0;
      std::uint32_t pick = 0;
      for (std::uint32_t i = 0; i < n; ++i) {
        if (sizes[state.assignment[i]] <= 1) continue; // do not empty another cluster
        const double dist = squared_distance(points.row(i), centroid(state.assignment[i]));
        if (dist > worst) {
          worst = dist;
          pick = i;
        }
      }
      --sizes[state.assignment[pick]];
      state.assignment[pick] = c;
      sizes[c] = 1;
      std::copy_n(points.row(pick).data(), d, centroid(c).data());
    }

    std::fill(sums.begin(), sums.end(), 0.0);
    for (std::uint32_t i = 0; i < n; ++i) {
      const auto row = points.row(i);
      double* dst = sums.data() + static_cast<std::size_t>(state.assignment[i]) * d;
      for (std::uint32_t t = 0; t < d; ++t) dst[t] += row[t];
    }
    for (std::uint32_t c = 0; c < k; ++c) {
      if (sizes[c] == 0) continue;
      for (std::uint32_t t = 0; t < d; ++t) {
        centroid(c)[t] = sums[static_cast<std::size_t>(c) * d + t] / sizes[c];
      }
    }

    wcss = 0.0;
    for (std::uint32_t i = 0; i < n; ++i) {
      wcss += squared_distance(points.row(i), centroid(state.assignment[i]));
    }
    if (history) history->push_back(wcss);

    if (state.assignment == previous) break;
    previous = state.assignment;
  }
  return wcss;
}

} // namespace

KMeansResult kmeans(const RowMatrix& points, std::uint32_t k, std::uint32_t max_iters,
                    std::uint32_t restarts, std::uint64_t seed) {
  const std::uint32_t n = points.rows;
  if (k == 0) throw std::invalid_argument("k must be >= 1");
  if (k > n) throw std::invalid_argument("k exceeds point count");
  if (max_iters == 0) throw std::invalid_argument("max_iters must be >= 1");
  if (restarts == 0) throw std::invalid_argument("restarts must be >= 1");

  KMeansResult best;
  best.wcss = std::numeric_limits<double>::infinity();
  LloydState state;
  for (std::uint32_t r = 0; r < restarts; ++r) {
    Rng rng = Rng::for_task(seed, kKmeansStream, r);
    std::vector<double> history;
    const double wcss = run_lloyd(points, k, max_iters, rng, state, &history);
    if (wcss < best.wcss) {
      best.wcss = wcss;
      best.clusters.assignment = state.assignment;
      best.clusters.k = k;
      best.wcss_history = std::move(history);
    }
  }
  return best;
}

double modularity(const Graph& g, const ClusterAssignment& clusters) {
  const std::uint32_t n = g.vertex_count();
  const double m = static_cast<double>(g.edge_count());
  if (g.edge_count() == 0) {
    throw std::runtime_error("modularity undefined on an edgeless graph");
  }
  if (clusters.assignment.size() != n) {
    throw std::invalid_argument("cluster assignment does not cover every vertex");
  }
  const std::uint32_t k = clusters.k;
  for (std::uint32_t c : clusters.assignment) {
    if (c >= k) throw std::invalid_argument("cluster id out of range");
  }

  std::vector<double> intra(k, 0.0);
  std::vector<double> degree_sum(k, 0.0);
  for (VertexId v = 0; v < n; ++v) {
    const std::uint32_t cv = clusters.assignment[v];
    degree_sum[cv] += g.degree(v);
    for (VertexId u : g.neighbors(v)) {
      if (u > v && clusters.assignment[u] == cv) intra[cv] += 1.0;
    }
  }
  double q = 0.0;
  for (std::uint32_t c = 0; c < k; ++c) {
    const double e_c = intra[c] / m;
    const double a_c = degree_sum[c] / (2.0 * m);
    q += e_c - a_c * a_c;
  }
  return q;
}

} // namespace graphembed
