#pragma once

#include <cstdint>
#include <unordered_map>

#include "anosketch/matrix.hpp"
#include "anosketch/submatrix.hpp"

namespace anosketch {

/// Reference counter: exact per-edge decayed counts in an associative table,
/// with the same decay semantics as the sketch (including the count floor).
/// Test-side ground truth; unbounded memory, never in the scoring path.
class ExactCounter {
 public:
  void update(std::uint64_t u, std::uint64_t v, double w);
  void decay(double factor, std::int64_t elapsed_ticks);
  double count(std::uint64_t u, std::uint64_t v) const;
  std::size_t distinct_keys() const { return counts_.size(); }

 private:
  struct KeyHash {
    std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& k) const {
      std::uint64_t h = k.first * 0x9e3779b97f4a7c15ull;
      h ^= k.second + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      return std::size_t(h);
    }
  };
  std::unordered_map<std::pair<std::uint64_t, std::uint64_t>, double, KeyHash>
      counts_;
};

struct DensestResult {
  double density = 0.0;
  IndexSet rows;
  IndexSet cols;
};

/// Exhaustive densest block over all nonempty row/column subsets.  Ties keep
/// the first hit in enumeration order (row masks outer and ascending, column
/// masks inner), i.e. the lexicographically smallest (rows, cols) pair.
/// Enumerates 2^(2n) subsets; n <= 12 is advised and n > 16 is rejected.
DensestResult brute_densest(const CountMatrix& m);

/// Same search restricted to blocks containing (row, col).
DensestResult brute_seeded_densest(const CountMatrix& m, int row, int col);

}  // namespace anosketch
