#include <chrono>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include <graphembed/diffusion.hpp>
#include <graphembed/evaluation.hpp>
#include <graphembed/features.hpp>
#include <graphembed/graph.hpp>
#include <graphembed/io.hpp>
#include <graphembed/trainer.hpp>
#include <graphembed/version.hpp>

using json = nlohmann::ordered_json;
using namespace graphembed;

namespace {

constexpr std::uint32_t kKmeansMaxIters = 100;
constexpr std::uint32_t kKmeansRestarts = 16;

struct Options {
  std::string input;
  std::string output;
  std::string manifest;
  std::string corpus_dump;
  std::string features_dump;
  std::string errors_dump;
  std::string clusters_dump;
  std::string embedding;
  std::uint32_t dim = 128;
  std::uint32_t window = 3;
  std::uint32_t tree_size = 40;    // l
  std::uint32_t replicates = 10;   // sigma
  std::uint32_t epochs = 5;
  double alpha0 = 0.025;
  std::uint32_t workers = std::max(1u, std::thread::hardware_concurrency());
  std::uint64_t seed = 1;
  std::uint32_t k = 2;
  std::uint32_t num_sources = 100;
  std::uint32_t repeats = 3;
};

double elapsed_seconds(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

template <typename Fn>
double timed(Fn&& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  fn();
  return elapsed_seconds(t0);
}

std::string manifest_path(const Options& opt) {
  return opt.manifest.empty() ? opt.output + ".manifest.json" : opt.manifest;
}

json base_manifest(const std::string& subcommand, const Options& opt) {
  json m;
  m["tool"] = "graphembed";
  m["version"] = kVersion;
  m["subcommand"] = subcommand;
  json params;
  params["input"] = opt.input;
  params["output"] = opt.output;
  params["dim"] = opt.dim;
  params["window"] = opt.window;
  params["diffusion_size"] = opt.tree_size;
  params["diffusion_count"] = opt.replicates;
  params["epochs"] = opt.epochs;
  params["alpha0"] = opt.alpha0;
  params["workers"] = opt.workers;
  params["seed"] = opt.seed;
  params["k"] = opt.k;
  params["num_sources"] = opt.num_sources;
  params["repeats"] = opt.repeats;
  m["parameters"] = std::move(params);
  m["timings_seconds"] = json::object();
  return m;
}

void write_manifest(const json& manifest, const Options& opt) {
  io::write_text_atomic(manifest_path(opt), manifest.dump(2) + "\n");
}

std::vector<std::string> graph_labels(const Graph& g) {
  std::vector<std::string> labels;
  labels.reserve(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) labels.push_back(g.label(v));
  return labels;
}

int run_embed(const Options& opt) {
  json manifest = base_manifest("embed", opt);
  auto& timings = manifest["timings_seconds"];

  const auto t_load = std::chrono::steady_clock::now();
  const Graph g = Graph::from_edge_list_file(opt.input);
  timings["load"] = elapsed_seconds(t_load);

  RowMatrix embedding(g.vertex_count(), opt.dim);
  Corpus corpus;
  timings["sample"] = timed([&] {
    corpus = generate_corpus(g, {.tree_size = opt.tree_size,
                                 .replicates = opt.replicates,
                                 .seed = opt.seed,
                                 .workers = opt.workers});
  });
  timings["extract"] = 0.0;
  timings["train"] = 0.0;

  // A single-vertex graph has nothing to train against; its embedding is
  // the zero vector.
  if (g.vertex_count() >= 2) {
    const auto t_extract = std::chrono::steady_clock::now();
    const CooccurrenceCounts counts =
        extract_cooccurrences(corpus, opt.window, g.vertex_count());
    timings["extract"] = elapsed_seconds(t_extract);

    TrainStats stats;
    timings["train"] = timed([&] {
      const TrainConfig cfg{.dim = opt.dim,
                            .epochs = opt.epochs,
                            .alpha0 = opt.alpha0,
                            .alpha_min = opt.alpha0 * 1e-4,
                            .workers = opt.workers,
                            .seed = opt.seed};
      const EmbeddingModel model = train(counts, cfg, corpus.vertex_counts, &stats);
      embedding = model.w_in();
    });
    manifest["train_epoch_mean_loss"] = stats.epoch_mean_loss;
    if (!opt.features_dump.empty()) {
      io::write_text_atomic(opt.features_dump, io::format_features_csv(counts, g));
    }
  }

  io::write_embedding_csv(opt.output, graph_labels(g), embedding);
  if (!opt.corpus_dump.empty()) {
    io::write_text_atomic(opt.corpus_dump, io::format_corpus(corpus, g));
  }
  write_manifest(manifest, opt);
  return 0;
}

int run_eval_distance(const Options& opt) {
  json manifest = base_manifest("eval-distance", opt);
  auto& timings = manifest["timings_seconds"];

  const auto t_load = std::chrono::steady_clock::now();
  const Graph g = Graph::from_edge_list_file(opt.input);
  timings["load"] = elapsed_seconds(t_load);

  const io::NamedEmbedding named = io::read_embedding_csv(opt.embedding);
  const RowMatrix aligned = io::align_embedding(g, named);

  DistortionReport report;
  timings["evaluate"] = timed([&] {
    report = distortion_report(g, aligned, opt.num_sources, opt.seed);
  });

  json out;
  out["gamma"] = report.gamma;
  out["pair_count"] = report.pair_count;
  json cdf;
  for (const auto& [threshold, fraction] : report.cdf) {
    char key[16];
    std::snprintf(key, sizeof(key), "%.1f", threshold);
    cdf[key] = fraction;
  }
  out["cdf"] = std::move(cdf);
  out["median_error"] = report.median_error;
  io::write_text_atomic(opt.output, out.dump(2) + "\n");

  if (!opt.errors_dump.empty()) {
    std::string csv = "u,v,graph_distance,embedding_distance,error\n";
    for (std::size_t i = 0; i < report.pairs.size(); ++i) {
      const auto& p = report.pairs[i];
      char buf[96];
      std::snprintf(buf, sizeof(buf), ",%d,%.9g,%.9g\n", p.graph_distance,
                    p.embedding_distance, report.errors[i]);
      csv += g.label(p.u);
      csv += ',';
      csv += g.label(p.v);
      csv += buf;
    }
    io::write_text_atomic(opt.errors_dump, csv);
  }
  write_manifest(manifest, opt);
  return 0;
}

int run_eval_cluster(const Options& opt) {
  json manifest = base_manifest("eval-cluster", opt);
  auto& timings = manifest["timings_seconds"];

  const auto t_load = std::chrono::steady_clock::now();
  const Graph g = Graph::from_edge_list_file(opt.input);
  timings["load"] = elapsed_seconds(t_load);

  const io::NamedEmbedding named = io::read_embedding_csv(opt.embedding);
  const RowMatrix aligned = io::align_embedding(g, named);

  KMeansResult result;
  double q = 0.0;
  timings["evaluate"] = timed([&] {
    result = kmeans(aligned, opt.k, kKmeansMaxIters, kKmeansRestarts, opt.seed);
    q = modularity(g, result.clusters);
  });

  std::vector<std::uint64_t> sizes(opt.k, 0);
  for (auto c : result.clusters.assignment) ++sizes[c];

  json out;
  out["k"] = opt.k;
  out["modularity"] = q;
  out["wcss"] = result.wcss;
  out["cluster_sizes"] = sizes;
  io::write_text_atomic(opt.output, out.dump(2) + "\n");

  if (!opt.clusters_dump.empty()) {
    io::write_text_atomic(opt.clusters_dump, io::format_cluster_csv(g, result.clusters));
  }
  write_manifest(manifest, opt);
  return 0;
}

int run_benchmark(const Options& opt) {
  json manifest = base_manifest("benchmark", opt);
  auto& timings = manifest["timings_seconds"];

  // Matched budgets: walks of length 2l-1 emit the same vertex count per
  // sequence as Euler walks over l-vertex trees, and walks-per-node equals
  // the diffusion replicate count.
  const std::uint32_t walk_length = 2 * opt.tree_size - 1;

  std::vector<double> load_runs, diffusion_runs, walk_runs;
  Graph g = Graph::from_edge_list_file(opt.input);
  Corpus diffusion_corpus, walk_corpus;

  for (std::uint32_t rep = 0; rep < opt.repeats; ++rep) {
    load_runs.push_back(timed([&] { g = Graph::from_edge_list_file(opt.input); }));
    diffusion_runs.push_back(timed([&] {
      diffusion_corpus = generate_corpus(g, {.tree_size = opt.tree_size,
                                             .replicates = opt.replicates,
                                             .seed = opt.seed + rep,
                                             .workers = opt.workers});
    }));
    walk_runs.push_back(timed([&] {
      walk_corpus = generate_walk_corpus(g, {.walk_length = walk_length,
                                             .walks_per_source = opt.replicates,
                                             .seed = opt.seed + rep,
                                             .workers = opt.workers});
    }));
  }

  auto mean = [](const std::vector<double>& xs) {
    double s = 0.0;
    for (double x : xs) s += x;
    return xs.empty() ? 0.0 : s / static_cast<double>(xs.size());
  };
  auto stats_of = [&](const Corpus& corpus) {
    std::uint64_t vertices = 0, observations = 0;
    for (const auto& s : corpus.sequences) {
      vertices += s.size();
      observations += s.empty() ? 0 : s.size() - 1;
    }
    json j;
    j["sequences"] = corpus.sequences.size();
    j["total_vertices"] = vertices;
    j["adjacency_observations"] = observations;
    return j;
  };

  json out;
  out["repeats"] = opt.repeats;
  out["vertex_count"] = g.vertex_count();
  out["edge_count"] = g.edge_count();
  out["preprocessing"] = {{"mean_seconds", mean(load_runs)}, {"runs_seconds", load_runs}};
  json diffusion = stats_of(diffusion_corpus);
  diffusion["tree_size"] = opt.tree_size;
  diffusion["replicates"] = opt.replicates;
  diffusion["mean_seconds"] = mean(diffusion_runs);
  diffusion["runs_seconds"] = diffusion_runs;
  out["diffusion"] = std::move(diffusion);
  json walk = stats_of(walk_corpus);
  walk["walk_length"] = walk_length;
  walk["walks_per_source"] = opt.replicates;
  walk["mean_seconds"] = mean(walk_runs);
  walk["runs_seconds"] = walk_runs;
  out["random_walk"] = std::move(walk);

  io::write_text_atomic(opt.output, out.dump(2) + "\n");

  timings["load"] = mean(load_runs);
  timings["sample"] = mean(diffusion_runs);
  write_manifest(manifest, opt);
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"node embeddings from diffusion trees and Euler walks"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--input", opt.input, "edge-list file (two tokens per line)")
        ->required();
    cmd->add_option("--output", opt.output, "output file")->required();
    cmd->add_option("--seed", opt.seed, "random seed");
    cmd->add_option("--manifest", opt.manifest,
                    "run manifest path (default: <output>.manifest.json)");
  };

  CLI::App* embed = app.add_subcommand("embed", "train an embedding CSV");
  add_common(embed);
  embed->add_option("--dim", opt.dim, "embedding dimension")->check(CLI::PositiveNumber);
  embed->add_option("--window", opt.window, "co-occurrence window")
      ->check(CLI::PositiveNumber);
  embed->add_option("--diffusion-size", opt.tree_size, "vertices per diffusion tree")
      ->check(CLI::PositiveNumber);
  embed->add_option("--diffusion-count", opt.replicates, "trees per source vertex")
      ->check(CLI::PositiveNumber);
  embed->add_option("--epochs", opt.epochs, "training epochs")->check(CLI::PositiveNumber);
  embed->add_option("--alpha0", opt.alpha0, "initial learning rate")
      ->check(CLI::PositiveNumber);
  embed->add_option("--workers", opt.workers, "parallelism degree")
      ->check(CLI::PositiveNumber);
  embed->add_option("--corpus", opt.corpus_dump, "also dump the sequence corpus");
  embed->add_option("--features", opt.features_dump,
                    "also dump dense hitting frequency vectors (CSV)");

  CLI::App* dist = app.add_subcommand("eval-distance",
                                      "distance distortion of an embedding");
  add_common(dist);
  dist->add_option("--embedding", opt.embedding, "embedding CSV to evaluate")->required();
  dist->add_option("--num-sources", opt.num_sources, "BFS sources to sample")
      ->check(CLI::PositiveNumber);
  dist->add_option("--errors", opt.errors_dump, "also dump per-pair errors (CSV)");

  CLI::App* clus = app.add_subcommand("eval-cluster",
                                      "k-means communities scored by modularity");
  add_common(clus);
  clus->add_option("--embedding", opt.embedding, "embedding CSV to evaluate")->required();
  clus->add_option("--k", opt.k, "number of clusters")
      ->required()
      ->check(CLI::PositiveNumber);
  clus->add_option("--clusters", opt.clusters_dump, "also dump per-vertex clusters (CSV)");

  CLI::App* bench = app.add_subcommand("benchmark",
                                       "time diffusion vs random-walk generation");
  add_common(bench);
  bench->add_option("--diffusion-size", opt.tree_size, "vertices per diffusion tree")
      ->check(CLI::PositiveNumber);
  bench->add_option("--diffusion-count", opt.replicates, "trees per source vertex")
      ->check(CLI::PositiveNumber);
  bench->add_option("--workers", opt.workers, "parallelism degree")
      ->check(CLI::PositiveNumber);
  bench->add_option("--repeats", opt.repeats, "timing repetitions")
      ->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    if (embed->parsed()) return run_embed(opt);
    if (dist->parsed()) return run_eval_distance(opt);
    if (clus->parsed()) return run_eval_cluster(opt);
    if (bench->parsed()) return run_benchmark(opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
