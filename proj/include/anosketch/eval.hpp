#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "anosketch/stream_io.hpp"

namespace anosketch {

struct ScoredItem {
  double score = 0.0;
  bool label = false;
};

/// Area under the ROC curve via rank statistics; tied scores get midranks.
/// Throws DegenerateLabelsError when only one class is present.
double roc_auc(const std::vector<ScoredItem>& items);

/// Zips scores with 0/1 labels; sizes must match.
std::vector<ScoredItem> make_scored(const std::vector<double>& scores,
                                    const std::vector<std::uint8_t>& labels);

enum class Method { kAnoEdgeG, kAnoEdgeL, kAnoGraph, kAnoGraphK };

/// Accepts anoedge-g, anoedge-l, anograph, anograph-k.
Method parse_method(std::string_view name);
std::string_view method_name(Method m);
bool is_edge_method(Method m);

struct SketchParams {
  int n_r = 2;
  int n_b = 32;
  double decay = 0.9;
  int k = 5;
  std::uint64_t seed = 42;
};

/// One score per edge, in stream order.  state_bytes, when given, receives
/// the structural footprint of the scoring state after the run.
std::vector<double> score_edge_stream(Method m,
                                      const std::vector<EdgeRecord>& edges,
                                      const SketchParams& p,
                                      std::size_t* state_bytes = nullptr);

/// One score per snapshot, in window order.
std::vector<double> score_snapshots(Method m,
                                    const std::vector<GraphSnapshot>& snapshots,
                                    const SketchParams& p,
                                    std::size_t* state_bytes = nullptr);

struct BenchResult {
  std::optional<double> auc_mean;
  std::optional<double> auc_std;
  double runtime_mean_s = 0.0;
  double runtime_std_s = 0.0;
  std::size_t peak_state_bytes = 0;
};

/// Repeats scoring `repeats` times with per-repeat seeds p.seed + i, timing
/// the scoring loop only (inputs are already materialized).  AUC statistics
/// appear when labels are given.
BenchResult run_benchmark(Method m, const std::vector<EdgeRecord>& edges,
                          const std::vector<std::uint8_t>* labels,
                          const SketchParams& p, int repeats);

/// Graph-method variant; snapshot labels must be present for AUC.
BenchResult run_benchmark(Method m,
                          const std::vector<GraphSnapshot>& snapshots,
                          const SketchParams& p, int repeats);

std::string result_csv_header();
std::string format_result_row(std::string_view method, std::string_view dataset,
                              const SketchParams& p, std::int64_t window_ticks,
                              int threshold, const BenchResult& r);

}  // namespace anosketch
