#pragma once

#include <cstdint>

#include "anosketch/hcms.hpp"
#include "anosketch/stream_io.hpp"
#include "anosketch/submatrix.hpp"

namespace anosketch {

/// Densest block found by greedy peeling from the full matrix: repeatedly
/// drop the min-sum row or min-sum column (the row only when its sum is
/// strictly smaller), recording density after each drop while both sets are
/// nonempty.  The result is within a factor 2 of the densest block.
double anograph_density(const CountMatrix& m);

/// Max over the k largest cells (ties to lowest row, then column) of the
/// greedy dense-block search seeded at that cell.  k must lie in [1, n^2].
double anograph_k_density(const CountMatrix& m, int k);

/// Scores a graph snapshot: count its edges into a fresh sketch, then take
/// the min over hash rows of the peeled dense-block density.
class AnoGraph {
 public:
  AnoGraph(int n_r, int n_b, std::uint64_t seed);

  double score(const GraphSnapshot& g);

  const HCms& sketch() const { return sketch_; }
  std::size_t state_bytes() const;

 private:
  HCms sketch_;
};

/// Same per-snapshot scheme with the seeded search from the k largest cells.
class AnoGraphK {
 public:
  AnoGraphK(int n_r, int n_b, int k, std::uint64_t seed);

  double score(const GraphSnapshot& g);

  const HCms& sketch() const { return sketch_; }
  std::size_t state_bytes() const;

 private:
  HCms sketch_;
  int k_;
};

}  // namespace anosketch
