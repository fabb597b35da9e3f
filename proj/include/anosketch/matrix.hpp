#pragma once

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <vector>

namespace anosketch {

// Counts this small are indistinguishable from zero for scoring purposes;
// flushing them during decay keeps the cells out of the denormal range.
inline constexpr double kCountFloor = 1e-300;

/// Square matrix of non-negative decaying counts, row-major.
class CountMatrix {
 public:
  explicit CountMatrix(int n) : n_(n), cells_(std::size_t(n) * n, 0.0) {}

  int size() const { return n_; }

  double at(int i, int j) const { return cells_[idx(i, j)]; }

  void add(int i, int j, double w) { cells_[idx(i, j)] += w; }

  /// Multiplies every cell by factor, flushing vanishing counts to zero.
  void scale(double factor) {
    if (factor == 1.0) return;
    for (double& c : cells_) {
      c *= factor;
      if (c < kCountFloor) c = 0.0;
    }
  }

  void clear() { std::fill(cells_.begin(), cells_.end(), 0.0); }

  double total() const {
    double s = 0.0;
    for (double c : cells_) s += c;
    return s;
  }

  std::size_t state_bytes() const {
    return sizeof(*this) + cells_.capacity() * sizeof(double);
  }

 private:
  std::size_t idx(int i, int j) const {
    assert(i >= 0 && i < n_ && j >= 0 && j < n_);
    return std::size_t(i) * n_ + j;
  }

  int n_;
  std::vector<double> cells_;
};

}  // namespace anosketch
