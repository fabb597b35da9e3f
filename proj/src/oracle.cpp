#include "anosketch/oracle.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "anosketch/errors.hpp"

namespace anosketch {

void ExactCounter::update(std::uint64_t u, std::uint64_t v, double w) {
  if (w < 0.0) throw std::invalid_argument("negative edge weight");
  counts_[{u, v}] += w;
}

void ExactCounter::decay(double factor, std::int64_t elapsed_ticks) {
  if (!(factor > 0.0) || factor > 1.0)
    throw std::invalid_argument("decay factor must be in (0, 1]");
  if (elapsed_ticks < 0) throw std::invalid_argument("negative elapsed ticks");
  double f = std::pow(factor, double(elapsed_ticks));
  if (f == 1.0) return;
  for (auto& [key, c] : counts_) {
    c *= f;
    if (c < kCountFloor) c = 0.0;
  }
}

double ExactCounter::count(std::uint64_t u, std::uint64_t v) const {
  auto it = counts_.find({u, v});
  return it == counts_.end() ? 0.0 : it->second;
}

namespace {

IndexSet mask_to_set(std::uint32_t mask, int n) {
  IndexSet s(n);
  for (int i = 0; i < n; ++i)
    if (mask >> i & 1u) s.add(i);
  return s;
}

// Shared enumeration core; seed masks are 0 for the unrestricted search.
DensestResult densest_impl(const CountMatrix& m, std::uint32_t row_need,
                           std::uint32_t col_need) {
  const int n = m.size();
  if (n > 16) throw SizeError("exhaustive search limited to 16x16 matrices");
  const std::uint32_t end = 1u << n;

  // col_totals[cmask] for the current row mask, filled by lowest-set-bit
  // recurrence so each mask costs O(1).
  std::vector<double> col_of_row(std::size_t(n), 0.0);
  std::vector<double> col_totals(std::size_t(end), 0.0);

  bool have = false;
  DensestResult best{0.0, IndexSet(n), IndexSet(n)};
  std::uint32_t best_rmask = 0, best_cmask = 0;

  for (std::uint32_t rmask = 1; rmask < end; ++rmask) {
    if ((rmask & row_need) != row_need) continue;
    // Sum of each column over the rows of rmask.
    for (int j = 0; j < n; ++j) {
      double s = 0.0;
      for (int i = 0; i < n; ++i)
        if (rmask >> i & 1u) s += m.at(i, j);
      col_of_row[std::size_t(j)] = s;
    }
    for (std::uint32_t cmask = 1; cmask < end; ++cmask) {
      std::uint32_t low = cmask & (~cmask + 1);
      int lowbit = 0;
      while (!(low >> lowbit & 1u)) ++lowbit;
      col_totals[cmask] =
          col_totals[cmask ^ low] + col_of_row[std::size_t(lowbit)];
      if ((cmask & col_need) != col_need) continue;
      int rcount = __builtin_popcount(rmask);
      int ccount = __builtin_popcount(cmask);
      double d = col_totals[cmask] / std::sqrt(double(rcount) * double(ccount));
      if (!have || d > best.density) {
        have = true;
        best.density = d;
        best_rmask = rmask;
        best_cmask = cmask;
      }
    }
  }
  best.rows = mask_to_set(best_rmask, n);
  best.cols = mask_to_set(best_cmask, n);
  return best;
}

}  // namespace

DensestResult brute_densest(const CountMatrix& m) {
  return densest_impl(m, 0, 0);
}

DensestResult brute_seeded_densest(const CountMatrix& m, int row, int col) {
  if (row < 0 || row >= m.size() || col < 0 || col >= m.size())
    throw std::invalid_argument("seed cell out of range");
  return densest_impl(m, 1u << row, 1u << col);
}

}  // namespace anosketch
