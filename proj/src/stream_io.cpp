#include "anosketch/stream_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <random>
#include <stdexcept>

#include "anosketch/errors.hpp"

namespace anosketch {

std::uint32_t NodeInterner::intern(std::string_view name) {
  auto it = ids_.find(std::string(name));
  if (it != ids_.end()) return it->second;
  auto id = std::uint32_t(names_.size());
  names_.emplace_back(name);
  ids_.emplace(names_.back(), id);
  return id;
}

void NodeInterner::dump(std::ostream& os) const {
  for (const auto& n : names_) os << n << '\n';
}

NodeInterner NodeInterner::load(std::istream& is) {
  NodeInterner t;
  std::string line;
  while (std::getline(is, line)) t.intern(line);
  return t;
}

EdgeFormat parse_edge_format(std::string_view name) {
  if (name == "csv-uvt") return EdgeFormat::kCsvUvt;
  if (name == "csv-uvwt") return EdgeFormat::kCsvUvwt;
  throw std::invalid_argument("unknown edge format: " + std::string(name));
}

namespace {

// Splits on commas in place; returns false when the field count is off.
bool split_fields(std::string_view line, std::string_view* out, int want) {
  int n = 0;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = line.find(',', pos);
    if (n == want) return false;
    out[n++] = line.substr(pos, comma == std::string_view::npos
                                    ? std::string_view::npos
                                    : comma - pos);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return n == want;
}

std::int64_t parse_tick(std::string_view s, std::size_t line_no) {
  std::int64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size())
    throw ParseError("bad timestamp '" + std::string(s) + "'", line_no);
  return v;
}

double parse_weight(std::string_view s, std::size_t line_no) {
  // from_chars<double> keeps parsing locale-free.
  double v = 0.0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size() || !(v >= 0.0))
    throw ParseError("bad weight '" + std::string(s) + "'", line_no);
  return v;
}

}  // namespace

EdgeStream parse_edge_stream(std::istream& in, EdgeFormat format) {
  EdgeStream out;
  std::string line;
  std::size_t line_no = 0;
  const int fields = format == EdgeFormat::kCsvUvwt ? 4 : 3;
  std::string_view f[4];
  bool have_prev = false;
  std::int64_t prev_t = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (!split_fields(line, f, fields))
      throw ParseError("expected " + std::to_string(fields) + " fields", line_no);
    EdgeRecord e;
    e.u = out.nodes.intern(f[0]);
    e.v = out.nodes.intern(f[1]);
    if (format == EdgeFormat::kCsvUvwt) {
      e.w = parse_weight(f[2], line_no);
      e.t = parse_tick(f[3], line_no);
    } else {
      e.w = 1.0;
      e.t = parse_tick(f[2], line_no);
    }
    if (have_prev && e.t < prev_t)
      throw StreamOrderError("timestamp regressed at line " +
                             std::to_string(line_no));
    prev_t = e.t;
    have_prev = true;
    out.edges.push_back(e);
  }
  return out;
}

EdgeStream parse_edge_stream(const std::string& path, EdgeFormat format) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open edge file: " + path);
  return parse_edge_stream(in, format);
}

std::vector<std::uint8_t> read_labels(std::istream& in) {
  std::vector<std::uint8_t> labels;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line == "0")
      labels.push_back(0);
    else if (line == "1")
      labels.push_back(1);
    else
      throw ParseError("label must be 0 or 1, got '" + line + "'", line_no);
  }
  return labels;
}

std::vector<std::uint8_t> read_labels(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open label file: " + path);
  return read_labels(in);
}

std::vector<GraphSnapshot> window_graphs(const std::vector<EdgeRecord>& stream,
                                         std::int64_t window_ticks) {
  if (window_ticks < 1)
    throw std::invalid_argument("window must span at least one tick");
  std::vector<GraphSnapshot> out;
  if (stream.empty()) return out;
  const std::int64_t t0 = stream.front().t;
  for (const auto& e : stream) {
    if (e.t < t0) throw StreamOrderError("stream not sorted by tick");
    std::int64_t k = (e.t - t0) / window_ticks;
    while (std::int64_t(out.size()) <= k) {
      GraphSnapshot g;
      g.index = std::int64_t(out.size());
      out.push_back(std::move(g));
    }
    out[std::size_t(k)].edges.push_back(e);
  }
  return out;
}

void label_snapshots(std::vector<GraphSnapshot>& snapshots,
                     const std::vector<std::uint8_t>& edge_labels,
                     int edge_threshold) {
  if (edge_threshold < 1)
    throw std::invalid_argument("edge threshold must be positive");
  std::size_t total = 0;
  for (const auto& g : snapshots) total += g.edges.size();
  if (total != edge_labels.size())
    throw AlignmentError("label count " + std::to_string(edge_labels.size()) +
                         " does not match edge count " + std::to_string(total));
  std::size_t pos = 0;
  for (auto& g : snapshots) {
    int positives = 0;
    for (std::size_t i = 0; i < g.edges.size(); ++i)
      positives += edge_labels[pos++];
    g.label = positives >= edge_threshold;
  }
}

void duplicate_undirected(std::vector<EdgeRecord>& edges,
                          std::vector<std::uint8_t>* labels) {
  if (labels && labels->size() != edges.size())
    throw AlignmentError("label count does not match edge count");
  std::vector<EdgeRecord> doubled;
  doubled.reserve(edges.size() * 2);
  std::vector<std::uint8_t> doubled_labels;
  if (labels) doubled_labels.reserve(edges.size() * 2);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    EdgeRecord e = edges[i];
    doubled.push_back(e);
    std::swap(e.u, e.v);
    doubled.push_back(e);
    if (labels) {
      doubled_labels.push_back((*labels)[i]);
      doubled_labels.push_back((*labels)[i]);
    }
  }
  edges = std::move(doubled);
  if (labels) *labels = std::move(doubled_labels);
}

SyntheticStream generate_synthetic(const SyntheticSpec& spec) {
  if (spec.node_count < 1)
    throw std::invalid_argument("synthetic: need at least one node");
  if (spec.duration_ticks < 1)
    throw std::invalid_argument("synthetic: need a positive duration");
  if (spec.background_edges < 0)
    throw std::invalid_argument("synthetic: negative background edge count");
  bool any_burst_edges = false;
  for (const auto& b : spec.bursts) {
    if (b.edges < 0 || b.duration_ticks < 1 || b.start_tick < 0)
      throw std::invalid_argument("synthetic: malformed burst");
    if (b.edges > 0 && (b.sources.empty() || b.targets.empty()))
      throw std::invalid_argument("synthetic: burst with no nodes");
    if (b.edges > 0) any_burst_edges = true;
  }
  if (spec.background_edges == 0 && !any_burst_edges)
    throw std::invalid_argument("synthetic: spec generates no edges");

  std::mt19937_64 rng(spec.seed);
  auto pick = [&rng](std::uint64_t n) { return rng() % n; };

  struct Tagged {
    EdgeRecord e;
    std::uint8_t label;
  };
  std::vector<Tagged> all;
  all.reserve(std::size_t(spec.background_edges));
  const auto nodes = std::uint64_t(spec.node_count);
  for (int i = 0; i < spec.background_edges; ++i) {
    Tagged t;
    t.e.u = std::uint32_t(pick(nodes));
    t.e.v = std::uint32_t(pick(nodes));
    t.e.w = 1.0;
    t.e.t = std::int64_t(pick(std::uint64_t(spec.duration_ticks)));
    t.label = 0;
    all.push_back(t);
  }
  for (const auto& b : spec.bursts) {
    for (int i = 0; i < b.edges; ++i) {
      Tagged t;
      t.e.u = b.sources[pick(b.sources.size())];
      t.e.v = b.targets[pick(b.targets.size())];
      t.e.w = 1.0;
      t.e.t = b.start_tick + std::int64_t(pick(std::uint64_t(b.duration_ticks)));
      t.label = 1;
      all.push_back(t);
    }
  }
  std::stable_sort(all.begin(), all.end(),
                   [](const Tagged& a, const Tagged& b) { return a.e.t < b.e.t; });

  SyntheticStream out;
  out.edges.reserve(all.size());
  out.labels.reserve(all.size());
  for (const auto& t : all) {
    out.edges.push_back(t.e);
    out.labels.push_back(t.label);
  }
  return out;
}

}  // namespace anosketch
