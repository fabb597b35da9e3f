#include "anosketch/anograph.hpp"

#include <limits>
#include <stdexcept>
#include <vector>

namespace anosketch {

double anograph_density(const CountMatrix& m) {
  constexpr double kNone = std::numeric_limits<double>::infinity();
  const int n = m.size();
  Submatrix sub(m);
  double best = sub.density();
  while (!sub.rows().empty() || !sub.cols().empty()) {
    int min_row = -1;
    double min_row_sum = kNone;
    for (int i = 0; i < n; ++i)
      if (sub.rows().contains(i) && sub.row_sum(i) < min_row_sum) {
        min_row_sum = sub.row_sum(i);
        min_row = i;
      }
    int min_col = -1;
    double min_col_sum = kNone;
    for (int j = 0; j < n; ++j)
      if (sub.cols().contains(j) && sub.col_sum(j) < min_col_sum) {
        min_col_sum = sub.col_sum(j);
        min_col = j;
      }
    // Strict: on a tie the column is peeled.
    if (min_row_sum < min_col_sum)
      sub.remove_row(min_row);
    else
      sub.remove_col(min_col);
    if (!sub.rows().empty() && !sub.cols().empty()) {
      double d = sub.density();
      if (d > best) best = d;
    }
  }
  return best;
}

double anograph_k_density(const CountMatrix& m, int k) {
  const int n = m.size();
  if (k < 1 || k > n * n)
    throw std::invalid_argument("seed count must lie in [1, n_b^2]");
  std::vector<char> picked(std::size_t(n) * n, 0);
  double best = 0.0;
  for (int pass = 0; pass < k; ++pass) {
    int pr = -1, pc = -1;
    double top = -1.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (!picked[std::size_t(i) * n + j] && m.at(i, j) > top) {
          top = m.at(i, j);
          pr = i;
          pc = j;
        }
    picked[std::size_t(pr) * n + pc] = 1;
    double d = edge_submatrix_density(m, pr, pc);
    if (d > best) best = d;
  }
  return best;
}

AnoGraph::AnoGraph(int n_r, int n_b, std::uint64_t seed)
    : sketch_(n_r, n_b, seed) {}

double AnoGraph::score(const GraphSnapshot& g) {
  sketch_.reset();
  for (const auto& e : g.edges) sketch_.update(e.u, e.v, e.w);
  double s = std::numeric_limits<double>::infinity();
  for (int r = 0; r < sketch_.rows(); ++r) {
    double d = anograph_density(sketch_.matrix(r));
    if (d < s) s = d;
  }
  return s;
}

std::size_t AnoGraph::state_bytes() const {
  return sizeof(*this) + (sketch_.state_bytes() - sizeof(HCms));
}

AnoGraphK::AnoGraphK(int n_r, int n_b, int k, std::uint64_t seed)
    : sketch_(n_r, n_b, seed), k_(k) {
  if (k < 1 || k > n_b * n_b)
    throw std::invalid_argument("seed count must lie in [1, n_b^2]");
}

double AnoGraphK::score(const GraphSnapshot& g) {
  sketch_.reset();
  for (const auto& e : g.edges) sketch_.update(e.u, e.v, e.w);
  double s = std::numeric_limits<double>::infinity();
  for (int r = 0; r < sketch_.rows(); ++r) {
    double d = anograph_k_density(sketch_.matrix(r), k_);
    if (d < s) s = d;
  }
  return s;
}

std::size_t AnoGraphK::state_bytes() const {
  return sizeof(*this) + (sketch_.state_bytes() - sizeof(HCms));
}

}  // namespace anosketch
