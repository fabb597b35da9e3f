#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace anosketch {

/// One directed edge of the stream; u and v are interned node ids and t is
/// an integer tick.  Records arrive in non-decreasing t order.
struct EdgeRecord {
  std::uint32_t u = 0;
  std::uint32_t v = 0;
  double w = 1.0;
  std::int64_t t = 0;
};

/// Edges of one time window; label is set once snapshots are labeled.
struct GraphSnapshot {
  std::int64_t index = 0;
  std::vector<EdgeRecord> edges;
  std::optional<bool> label;
};

/// Maps node names to dense ids, first-seen order.
class NodeInterner {
 public:
  std::uint32_t intern(std::string_view name);
  const std::string& name(std::uint32_t id) const { return names_[id]; }
  std::size_t size() const { return names_.size(); }

  /// One name per line in id order; load() rebuilds an identical table.
  void dump(std::ostream& os) const;
  static NodeInterner load(std::istream& is);

 private:
  std::unordered_map<std::string, std::uint32_t> ids_;
  std::vector<std::string> names_;
};

enum class EdgeFormat {
  kCsvUvt,   // source,destination,timestamp  (weight 1)
  kCsvUvwt,  // source,destination,weight,timestamp
};

/// Parses "csv-uvt" / "csv-uvwt"; anything else is an error.
EdgeFormat parse_edge_format(std::string_view name);

struct EdgeStream {
  std::vector<EdgeRecord> edges;
  NodeInterner nodes;
};

/// Reads an edge file.  Raises ParseError with the offending line number on
/// malformed input and StreamOrderError when a timestamp regresses.
EdgeStream parse_edge_stream(std::istream& in, EdgeFormat format);
EdgeStream parse_edge_stream(const std::string& path, EdgeFormat format);

/// One 0/1 label per line, aligned with the edge file.
std::vector<std::uint8_t> read_labels(std::istream& in);
std::vector<std::uint8_t> read_labels(const std::string& path);

/// Splits a t-sorted stream into half-open windows of window_ticks anchored
/// at the first edge's tick.  Windows with no edges still appear, empty.
std::vector<GraphSnapshot> window_graphs(const std::vector<EdgeRecord>& stream,
                                         std::int64_t window_ticks);

/// Marks each snapshot anomalous when it holds at least edge_threshold
/// positively-labeled edges.  Labels align with the stream the snapshots
/// were cut from; a length mismatch raises AlignmentError.
void label_snapshots(std::vector<GraphSnapshot>& snapshots,
                     const std::vector<std::uint8_t>& edge_labels,
                     int edge_threshold);

/// Appends the reverse of every edge next to it, doubling the stream; the
/// label vector, when given, is expanded alongside.
void duplicate_undirected(std::vector<EdgeRecord>& edges,
                          std::vector<std::uint8_t>* labels);

/// A burst injects `edges` uniform edges between the source and target node
/// subsets inside [start_tick, start_tick + duration_ticks).
struct BurstSpec {
  std::vector<std::uint32_t> sources;
  std::vector<std::uint32_t> targets;
  std::int64_t start_tick = 0;
  std::int64_t duration_ticks = 1;
  int edges = 0;
};

struct SyntheticSpec {
  int node_count = 0;
  int background_edges = 0;      // uniform over nodes and [0, duration_ticks)
  std::int64_t duration_ticks = 1;
  std::vector<BurstSpec> bursts;
  std::uint64_t seed = 0;
};

struct SyntheticStream {
  std::vector<EdgeRecord> edges;   // sorted by tick
  std::vector<std::uint8_t> labels;  // 1 on burst edges
};

/// Deterministic for a fixed spec; a spec with no edges at all is rejected.
SyntheticStream generate_synthetic(const SyntheticSpec& spec);

}  // namespace anosketch
