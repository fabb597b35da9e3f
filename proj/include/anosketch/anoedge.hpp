#pragma once

#include <cstdint>
#include <vector>

#include "anosketch/hcms.hpp"
#include "anosketch/stream_io.hpp"
#include "anosketch/submatrix.hpp"

namespace anosketch {

/// Grows sub toward the cell (row, col): the row joins when doing so
/// strictly raises density, then the column is judged against the possibly
/// grown block.  At most one row and one column are added.
void expand(Submatrix& sub, int row, int col);

/// Sheds decayed mass: repeatedly drop the min-sum row or min-sum column
/// (whichever sum is smaller; ties go to the column) while the drop strictly
/// raises density.  Stops when neither candidate helps; the block never
/// shrinks past 1x1.
void condense(Submatrix& sub);

/// Scores each edge as it arrives by the densest block around its cell:
/// decay to the edge's tick, count it, then take the min over hash rows of
/// the greedy dense-block search seeded at the edge's cell.
class AnoEdgeG {
 public:
  AnoEdgeG(int n_r, int n_b, double decay_factor, std::uint64_t seed);

  /// Edges must arrive in non-decreasing tick order.
  double score(const EdgeRecord& e);

  const HCms& sketch() const { return sketch_; }
  std::size_t state_bytes() const;

 private:
  void advance_time(std::int64_t t);

  HCms sketch_;
  double decay_;
  bool started_ = false;
};

/// Cheaper variant: one maintained block per hash row, nudged by each edge
/// (expand toward its cell, condense decayed slack) and scored by the mean
/// count over the cross of the block with the edge's cell.
class AnoEdgeL {
 public:
  AnoEdgeL(int n_r, int n_b, double decay_factor, std::uint64_t seed);

  double score(const EdgeRecord& e);

  const HCms& sketch() const { return sketch_; }
  const Submatrix& local_submatrix(int r) const { return subs_[r]; }
  std::size_t state_bytes() const;

 private:
  void advance_time(std::int64_t t);

  HCms sketch_;
  double decay_;
  bool started_ = false;
  std::vector<Submatrix> subs_;
};

}  // namespace anosketch
