// anosketch command line: score edge streams or graph snapshots, benchmark
// a method, or generate synthetic labeled streams.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "anosketch/errors.hpp"
#include "anosketch/eval.hpp"
#include "anosketch/stream_io.hpp"

namespace {

using namespace anosketch;

struct CommonOpts {
  std::string edges_path;
  std::string labels_path;
  std::string format = "csv-uvt";
  std::string out_path = "scores.txt";
  SketchParams params;
  std::int64_t window_minutes = 30;
  std::int64_t ticks_per_minute = 1;
  int threshold = 50;
  bool undirected = false;
};

void add_common_flags(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--edges", o.edges_path, "edge stream file")->required();
  cmd->add_option("--labels", o.labels_path, "0/1 label file aligned with --edges");
  cmd->add_option("--format", o.format, "csv-uvt | csv-uvwt")
      ->default_val("csv-uvt");
  cmd->add_option("--rows", o.params.n_r, "hash rows")->default_val(2);
  cmd->add_option("--buckets", o.params.n_b, "buckets per side")->default_val(32);
  cmd->add_option("--decay", o.params.decay, "per-tick decay factor")
      ->default_val(0.9);
  cmd->add_option("--k", o.params.k, "seed cells for anograph-k")->default_val(5);
  cmd->add_option("--window", o.window_minutes, "snapshot window, minutes")
      ->default_val(30);
  cmd->add_option("--ticks-per-minute", o.ticks_per_minute,
                  "stream ticks per minute")
      ->default_val(1);
  cmd->add_option("--threshold", o.threshold,
                  "anomalous edges per anomalous snapshot")
      ->default_val(50);
  cmd->add_option("--seed", o.params.seed, "hash/PRNG seed")->default_val(42);
  cmd->add_option("--out", o.out_path, "score output file")
      ->default_val("scores.txt");
  cmd->add_flag("--undirected", o.undirected,
                "treat each edge as two directed edges");
}

// The environment wins over the flag so wrappers can pin runs.
void apply_seed_env(SketchParams& p) {
  if (const char* s = std::getenv("ANOSKETCH_SEED")) {
    try {
      p.seed = std::stoull(s);
    } catch (const std::exception&) {
      throw std::invalid_argument("ANOSKETCH_SEED is not an integer: " +
                                  std::string(s));
    }
  }
}

std::string dataset_name(const std::string& path) {
  return std::filesystem::path(path).stem().string();
}

void write_edge_scores(const std::string& path, const std::vector<double>& s) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  char buf[64];
  for (double x : s) {
    std::snprintf(buf, sizeof(buf), "%.10g\n", x);
    out << buf;
  }
}

void write_graph_scores(const std::string& path, const std::vector<double>& s) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  char buf[96];
  for (std::size_t i = 0; i < s.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%zu,%.10g\n", i, s[i]);
    out << buf;
  }
}

int run_score_or_bench(const CommonOpts& opts, const std::string& method_str,
                       bool bench, int repeats) {
  Method method = parse_method(method_str);
  auto stream = parse_edge_stream(opts.edges_path, parse_edge_format(opts.format));
  std::vector<std::uint8_t> labels;
  bool have_labels = !opts.labels_path.empty();
  if (have_labels) {
    labels = read_labels(opts.labels_path);
    if (labels.size() != stream.edges.size())
      throw AlignmentError("label count " + std::to_string(labels.size()) +
                           " does not match edge count " +
                           std::to_string(stream.edges.size()));
  }
  if (opts.undirected)
    duplicate_undirected(stream.edges, have_labels ? &labels : nullptr);

  const std::int64_t window_ticks = opts.window_minutes * opts.ticks_per_minute;
  const std::string dataset = dataset_name(opts.edges_path);

  if (is_edge_method(method)) {
    if (bench) {
      auto r = run_benchmark(method, stream.edges,
                             have_labels ? &labels : nullptr, opts.params,
                             repeats);
      std::cout << result_csv_header() << '\n'
                << format_result_row(method_str, dataset, opts.params,
                                     window_ticks, opts.threshold, r)
                << '\n';
      return 0;
    }
    auto t0 = std::chrono::steady_clock::now();
    auto scores = score_edge_stream(method, stream.edges, opts.params);
    auto t1 = std::chrono::steady_clock::now();
    write_edge_scores(opts.out_path, scores);
    if (have_labels) {
      BenchResult r;
      r.auc_mean = roc_auc(make_scored(scores, labels));
      r.auc_std = 0.0;
      r.runtime_mean_s = std::chrono::duration<double>(t1 - t0).count();
      std::cout << result_csv_header() << '\n'
                << format_result_row(method_str, dataset, opts.params,
                                     window_ticks, opts.threshold, r)
                << '\n';
    }
    return 0;
  }

  auto snapshots = window_graphs(stream.edges, window_ticks);
  if (have_labels) label_snapshots(snapshots, labels, opts.threshold);
  if (bench) {
    auto r = run_benchmark(method, snapshots, opts.params, repeats);
    std::cout << result_csv_header() << '\n'
              << format_result_row(method_str, dataset, opts.params,
                                   window_ticks, opts.threshold, r)
              << '\n';
    return 0;
  }
  auto t0 = std::chrono::steady_clock::now();
  auto scores = score_snapshots(method, snapshots, opts.params);
  auto t1 = std::chrono::steady_clock::now();
  write_graph_scores(opts.out_path, scores);
  if (have_labels) {
    std::vector<ScoredItem> items(snapshots.size());
    for (std::size_t i = 0; i < snapshots.size(); ++i)
      items[i] = {scores[i], *snapshots[i].label};
    BenchResult r;
    r.auc_mean = roc_auc(items);
    r.auc_std = 0.0;
    r.runtime_mean_s = std::chrono::duration<double>(t1 - t0).count();
    std::cout << result_csv_header() << '\n'
              << format_result_row(method_str, dataset, opts.params,
                                   window_ticks, opts.threshold, r)
              << '\n';
  }
  return 0;
}

struct SynthOpts {
  int nodes = 100;
  int background = 10000;
  std::int64_t duration = 1000;
  int bursts = 1;
  int burst_nodes = 5;
  int burst_edges = 500;
  std::int64_t burst_duration = 50;
  std::uint64_t seed = 42;
  std::string out_path = "synthetic_edges.csv";
  std::string labels_path = "synthetic_labels.csv";
};

int run_synth(const SynthOpts& o) {
  SyntheticSpec spec;
  spec.node_count = o.nodes;
  spec.background_edges = o.background;
  spec.duration_ticks = o.duration;
  spec.seed = o.seed;

  // Burst node subsets are drawn from the same seed; bursts are spread
  // evenly over the stream.
  std::mt19937_64 rng(o.seed ^ 0xb5297a4d4be5a2b3ull);
  for (int b = 0; b < o.bursts; ++b) {
    BurstSpec burst;
    // Fisher-Yates prefix: sample burst_nodes distinct node ids.
    std::vector<std::uint32_t> pool(std::size_t(o.nodes));
    for (int i = 0; i < o.nodes; ++i) pool[std::size_t(i)] = std::uint32_t(i);
    for (int i = 0; i < o.burst_nodes && i < o.nodes; ++i) {
      std::size_t j = std::size_t(i) + rng() % (pool.size() - std::size_t(i));
      std::swap(pool[std::size_t(i)], pool[j]);
      burst.sources.push_back(pool[std::size_t(i)]);
    }
    burst.targets = burst.sources;
    std::int64_t slot = o.duration / std::int64_t(o.bursts);
    burst.start_tick = std::int64_t(b) * slot + (slot - o.burst_duration) / 2;
    if (burst.start_tick < 0) burst.start_tick = 0;
    burst.duration_ticks = o.burst_duration;
    burst.edges = o.burst_edges;
    spec.bursts.push_back(std::move(burst));
  }

  auto stream = generate_synthetic(spec);

  std::ofstream edges(o.out_path);
  if (!edges) throw std::runtime_error("cannot write " + o.out_path);
  char buf[96];
  for (const auto& e : stream.edges) {
    std::snprintf(buf, sizeof(buf), "%u,%u,%lld\n", e.u, e.v, (long long)e.t);
    edges << buf;
  }
  std::ofstream labels(o.labels_path);
  if (!labels) throw std::runtime_error("cannot write " + o.labels_path);
  for (auto l : stream.labels) labels << int(l) << '\n';
  std::fprintf(stderr, "wrote %zu edges (%d burst(s))\n", stream.edges.size(),
               o.bursts);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"streaming anomaly scores for dynamic graphs"};
  app.require_subcommand(1);

  CommonOpts score_opts;
  std::string score_method;
  auto* score = app.add_subcommand("score", "score every edge or snapshot");
  score->add_option("method,--method", score_method,
                    "anoedge-g | anoedge-l | anograph | anograph-k")
      ->required();
  add_common_flags(score, score_opts);

  CommonOpts bench_opts;
  std::string bench_method;
  int repeats = 5;
  auto* bench = app.add_subcommand("bench", "repeat runs, report auc/runtime");
  bench->add_option("method,--method", bench_method,
                    "anoedge-g | anoedge-l | anograph | anograph-k")
      ->required();
  add_common_flags(bench, bench_opts);
  bench->add_option("--repeats", repeats, "benchmark repetitions")
      ->default_val(5);

  SynthOpts synth_opts;
  auto* synth = app.add_subcommand("synth", "generate a labeled synthetic stream");
  synth->add_option("--nodes", synth_opts.nodes)->default_val(100);
  synth->add_option("--background", synth_opts.background,
                    "uniform background edges")
      ->default_val(10000);
  synth->add_option("--duration", synth_opts.duration, "stream length, ticks")
      ->default_val(1000);
  synth->add_option("--bursts", synth_opts.bursts, "dense burst count")
      ->default_val(1);
  synth->add_option("--burst-nodes", synth_opts.burst_nodes,
                    "nodes per burst block")
      ->default_val(5);
  synth->add_option("--burst-edges", synth_opts.burst_edges, "edges per burst")
      ->default_val(500);
  synth->add_option("--burst-duration", synth_opts.burst_duration,
                    "burst length, ticks")
      ->default_val(50);
  synth->add_option("--seed", synth_opts.seed)->default_val(42);
  synth->add_option("--out", synth_opts.out_path)
      ->default_val("synthetic_edges.csv");
  synth->add_option("--labels-out", synth_opts.labels_path)
      ->default_val("synthetic_labels.csv");

  CLI11_PARSE(app, argc, argv);

  try {
    if (score->parsed()) {
      apply_seed_env(score_opts.params);
      return run_score_or_bench(score_opts, score_method, false, 1);
    }
    if (bench->parsed()) {
      apply_seed_env(bench_opts.params);
      return run_score_or_bench(bench_opts, bench_method, true, repeats);
    }
    if (synth->parsed()) {
      if (const char* s = std::getenv("ANOSKETCH_SEED"))
        synth_opts.seed = std::stoull(s);
      return run_synth(synth_opts);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
