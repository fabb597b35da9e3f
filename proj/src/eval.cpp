#include "anosketch/eval.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <stdexcept>

#include "anosketch/anoedge.hpp"
#include "anosketch/anograph.hpp"
#include "anosketch/errors.hpp"

namespace anosketch {

double roc_auc(const std::vector<ScoredItem>& items) {
  std::size_t positives = 0;
  for (const auto& it : items) positives += it.label ? 1 : 0;
  const std::size_t negatives = items.size() - positives;
  if (positives == 0 || negatives == 0)
    throw DegenerateLabelsError("roc_auc needs both label classes");

  std::vector<std::size_t> order(items.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return items[a].score < items[b].score;
  });

  // Midranks over tied score runs keep the estimate unbiased.
  double positive_rank_sum = 0.0;
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    while (j < order.size() &&
           items[order[j]].score == items[order[i]].score)
      ++j;
    double midrank = 0.5 * double(i + 1 + j);  // ranks are 1-based
    for (std::size_t k = i; k < j; ++k)
      if (items[order[k]].label) positive_rank_sum += midrank;
    i = j;
  }
  double p = double(positives), n = double(negatives);
  return (positive_rank_sum - p * (p + 1.0) / 2.0) / (p * n);
}

std::vector<ScoredItem> make_scored(const std::vector<double>& scores,
                                    const std::vector<std::uint8_t>& labels) {
  if (scores.size() != labels.size())
    throw AlignmentError("scores and labels differ in length");
  std::vector<ScoredItem> items(scores.size());
  for (std::size_t i = 0; i < scores.size(); ++i)
    items[i] = {scores[i], labels[i] != 0};
  return items;
}

Method parse_method(std::string_view name) {
  if (name == "anoedge-g") return Method::kAnoEdgeG;
  if (name == "anoedge-l") return Method::kAnoEdgeL;
  if (name == "anograph") return Method::kAnoGraph;
  if (name == "anograph-k") return Method::kAnoGraphK;
  throw std::invalid_argument("unknown method: " + std::string(name));
}

std::string_view method_name(Method m) {
  switch (m) {
    case Method::kAnoEdgeG: return "anoedge-g";
    case Method::kAnoEdgeL: return "anoedge-l";
    case Method::kAnoGraph: return "anograph";
    case Method::kAnoGraphK: return "anograph-k";
  }
  return "?";
}

bool is_edge_method(Method m) {
  return m == Method::kAnoEdgeG || m == Method::kAnoEdgeL;
}

std::vector<double> score_edge_stream(Method m,
                                      const std::vector<EdgeRecord>& edges,
                                      const SketchParams& p,
                                      std::size_t* state_bytes) {
  if (!is_edge_method(m))
    throw std::invalid_argument("edge streams need an edge method");
  std::vector<double> scores;
  scores.reserve(edges.size());
  if (m == Method::kAnoEdgeG) {
    AnoEdgeG state(p.n_r, p.n_b, p.decay, p.seed);
    for (const auto& e : edges) scores.push_back(state.score(e));
    if (state_bytes) *state_bytes = state.state_bytes();
  } else {
    AnoEdgeL state(p.n_r, p.n_b, p.decay, p.seed);
    for (const auto& e : edges) scores.push_back(state.score(e));
    if (state_bytes) *state_bytes = state.state_bytes();
  }
  return scores;
}

std::vector<double> score_snapshots(Method m,
                                    const std::vector<GraphSnapshot>& snapshots,
                                    const SketchParams& p,
                                    std::size_t* state_bytes) {
  if (is_edge_method(m))
    throw std::invalid_argument("snapshots need a graph method");
  std::vector<double> scores;
  scores.reserve(snapshots.size());
  if (m == Method::kAnoGraph) {
    AnoGraph state(p.n_r, p.n_b, p.seed);
    for (const auto& g : snapshots) scores.push_back(state.score(g));
    if (state_bytes) *state_bytes = state.state_bytes();
  } else {
    AnoGraphK state(p.n_r, p.n_b, p.k, p.seed);
    for (const auto& g : snapshots) scores.push_back(state.score(g));
    if (state_bytes) *state_bytes = state.state_bytes();
  }
  return scores;
}

namespace {

struct Stats {
  double mean = 0.0, stdev = 0.0;
};

Stats mean_std(const std::vector<double>& xs) {
  Stats s;
  if (xs.empty()) return s;
  for (double x : xs) s.mean += x;
  s.mean /= double(xs.size());
  double var = 0.0;
  for (double x : xs) var += (x - s.mean) * (x - s.mean);
  s.stdev = std::sqrt(var / double(xs.size()));
  return s;
}

}  // namespace

BenchResult run_benchmark(Method m, const std::vector<EdgeRecord>& edges,
                          const std::vector<std::uint8_t>* labels,
                          const SketchParams& p, int repeats) {
  if (repeats < 1) throw std::invalid_argument("repeats must be positive");
  if (!is_edge_method(m))
    throw std::invalid_argument("edge streams need an edge method");
  BenchResult out;
  std::vector<double> runtimes, aucs;
  for (int rep = 0; rep < repeats; ++rep) {
    SketchParams rp = p;
    rp.seed = p.seed + std::uint64_t(rep);
    std::size_t bytes = 0;
    auto t0 = std::chrono::steady_clock::now();
    auto scores = score_edge_stream(m, edges, rp, &bytes);
    auto t1 = std::chrono::steady_clock::now();
    runtimes.push_back(std::chrono::duration<double>(t1 - t0).count());
    if (bytes > out.peak_state_bytes) out.peak_state_bytes = bytes;
    if (labels) aucs.push_back(roc_auc(make_scored(scores, *labels)));
  }
  auto rt = mean_std(runtimes);
  out.runtime_mean_s = rt.mean;
  out.runtime_std_s = rt.stdev;
  if (labels) {
    auto a = mean_std(aucs);
    out.auc_mean = a.mean;
    out.auc_std = a.stdev;
  }
  return out;
}

BenchResult run_benchmark(Method m,
                          const std::vector<GraphSnapshot>& snapshots,
                          const SketchParams& p, int repeats) {
  if (repeats < 1) throw std::invalid_argument("repeats must be positive");
  if (is_edge_method(m))
    throw std::invalid_argument("snapshots need a graph method");
  bool labeled = !snapshots.empty();
  for (const auto& g : snapshots)
    if (!g.label.has_value()) labeled = false;
  BenchResult out;
  std::vector<double> runtimes, aucs;
  for (int rep = 0; rep < repeats; ++rep) {
    SketchParams rp = p;
    rp.seed = p.seed + std::uint64_t(rep);
    std::size_t bytes = 0;
    auto t0 = std::chrono::steady_clock::now();
    auto scores = score_snapshots(m, snapshots, rp, &bytes);
    auto t1 = std::chrono::steady_clock::now();
    runtimes.push_back(std::chrono::duration<double>(t1 - t0).count());
    if (bytes > out.peak_state_bytes) out.peak_state_bytes = bytes;
    if (labeled) {
      std::vector<ScoredItem> items(snapshots.size());
      for (std::size_t i = 0; i < snapshots.size(); ++i)
        items[i] = {scores[i], *snapshots[i].label};
      aucs.push_back(roc_auc(items));
    }
  }
  auto rt = mean_std(runtimes);
  out.runtime_mean_s = rt.mean;
  out.runtime_std_s = rt.stdev;
  if (labeled) {
    auto a = mean_std(aucs);
    out.auc_mean = a.mean;
    out.auc_std = a.stdev;
  }
  return out;
}

std::string result_csv_header() {
  return "method,dataset,n_r,n_b,decay,K,window,threshold,auc_mean,auc_std,"
         "runtime_s";
}

std::string format_result_row(std::string_view method, std::string_view dataset,
                              const SketchParams& p, std::int64_t window_ticks,
                              int threshold, const BenchResult& r) {
  char buf[256];
  std::string auc_mean = "nan", auc_std = "nan";
  if (r.auc_mean) {
    std::snprintf(buf, sizeof(buf), "%.6f", *r.auc_mean);
    auc_mean = buf;
    std::snprintf(buf, sizeof(buf), "%.6f", *r.auc_std);
    auc_std = buf;
  }
  std::snprintf(buf, sizeof(buf), "%s,%s,%d,%d,%g,%d,%lld,%d,%s,%s,%.6f",
                std::string(method).c_str(), std::string(dataset).c_str(),
                p.n_r, p.n_b, p.decay, p.k, (long long)window_ticks, threshold,
                auc_mean.c_str(), auc_std.c_str(), r.runtime_mean_s);
  return buf;
}

}  // namespace anosketch
