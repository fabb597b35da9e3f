#pragma once

#include <cstdint>
#include <ostream>
#include <vector>

#include "anosketch/hash.hpp"
#include "anosketch/matrix.hpp"

namespace anosketch {

/// Count-min sketch over edges: n_r independent (row-hash, col-hash) pairs,
/// each mapping an edge (u, v) to one cell of an n_b x n_b count matrix.
/// Counts decay multiplicatively as the stream clock advances, so a cell
/// holds the decayed total of everything hashed into it.  The min over the
/// n_r cells never underestimates the exact decayed count of an edge.
class HCms {
 public:
  HCms(int n_r, int n_b, std::uint64_t seed);

  /// Adds w to the cell of (u, v) in every hash row.
  void update(std::uint64_t u, std::uint64_t v, double w);

  /// Multiplies every cell by factor^elapsed_ticks and advances last_tick.
  void decay(double factor, std::int64_t elapsed_ticks);

  /// Zeroes all counts; hash functions are untouched.
  void reset();

  /// Min over hash rows of the cell holding (u, v).
  double estimate(std::uint64_t u, std::uint64_t v) const;

  int rows() const { return n_r_; }
  int buckets() const { return n_b_; }

  const CountMatrix& matrix(int r) const { return matrices_[r]; }
  int row_index(int r, std::uint64_t u) const { return row_hash_[r](u); }
  int col_index(int r, std::uint64_t v) const { return col_hash_[r](v); }

  std::int64_t last_tick() const { return last_tick_; }
  void set_last_tick(std::int64_t t) { last_tick_ = t; }

  /// Structural footprint; constant for fixed (n_r, n_b) no matter how many
  /// updates have been applied.
  std::size_t state_bytes() const;

  /// Debug dump: matrices row-major as CSV, blank line between matrices.
  void dump_csv(std::ostream& os) const;

 private:
  int n_r_, n_b_;
  std::vector<HashFunction> row_hash_, col_hash_;
  std::vector<CountMatrix> matrices_;
  std::int64_t last_tick_ = 0;
};

}  // namespace anosketch
