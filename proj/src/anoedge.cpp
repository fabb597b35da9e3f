#include "anosketch/anoedge.hpp"

#include <cmath>
#include <limits>
#include <random>

#include "anosketch/errors.hpp"

namespace anosketch {

void expand(Submatrix& sub, int row, int col) {
  double d = sub.density();
  if (!sub.rows().contains(row)) {
    double grown = (sub.total() + sub.row_sum(row)) /
                   std::sqrt(double(sub.rows().count() + 1) *
                             double(sub.cols().count()));
    if (grown > d) {
      sub.add_row(row);
      d = sub.density();
    }
  }
  if (!sub.cols().contains(col)) {
    double grown = (sub.total() + sub.col_sum(col)) /
                   std::sqrt(double(sub.rows().count()) *
                             double(sub.cols().count() + 1));
    if (grown > d) sub.add_col(col);
  }
}

void condense(Submatrix& sub) {
  constexpr double kNone = std::numeric_limits<double>::infinity();
  for (;;) {
    const int rs = sub.rows().count();
    const int cs = sub.cols().count();
    if (rs <= 1 && cs <= 1) return;
    const int n = sub.matrix().size();

    int min_row = -1;
    double min_row_sum = kNone;
    if (rs > 1) {
      for (int i = 0; i < n; ++i)
        if (sub.rows().contains(i) && sub.row_sum(i) < min_row_sum) {
          min_row_sum = sub.row_sum(i);
          min_row = i;
        }
    }
    int min_col = -1;
    double min_col_sum = kNone;
    if (cs > 1) {
      for (int j = 0; j < n; ++j)
        if (sub.cols().contains(j) && sub.col_sum(j) < min_col_sum) {
          min_col_sum = sub.col_sum(j);
          min_col = j;
        }
    }

    const double d = sub.density();
    const double shed_row =
        min_row < 0 ? -kNone
                    : (sub.total() - min_row_sum) /
                          std::sqrt(double(rs - 1) * double(cs));
    const double shed_col =
        min_col < 0 ? -kNone
                    : (sub.total() - min_col_sum) /
                          std::sqrt(double(rs) * double(cs - 1));

    // Smaller sum goes first; a tie is treated as the column being smaller.
    const bool row_first = min_row >= 0 && (min_col < 0 || min_row_sum < min_col_sum);
    if (row_first) {
      if (shed_row > d) {
        sub.remove_row(min_row);
        continue;
      }
      if (shed_col > d) {
        sub.remove_col(min_col);
        continue;
      }
    } else {
      if (shed_col > d) {
        sub.remove_col(min_col);
        continue;
      }
      if (shed_row > d) {
        sub.remove_row(min_row);
        continue;
      }
    }
    return;
  }
}

AnoEdgeG::AnoEdgeG(int n_r, int n_b, double decay_factor, std::uint64_t seed)
    : sketch_(n_r, n_b, seed), decay_(decay_factor) {
  if (!(decay_factor > 0.0) || decay_factor > 1.0)
    throw std::invalid_argument("decay factor must be in (0, 1]");
}

void AnoEdgeG::advance_time(std::int64_t t) {
  if (!started_) {
    started_ = true;
    sketch_.set_last_tick(t);
    return;
  }
  if (t < sketch_.last_tick())
    throw StreamOrderError("edge timestamp older than stream head");
  if (t > sketch_.last_tick()) sketch_.decay(decay_, t - sketch_.last_tick());
}

double AnoEdgeG::score(const EdgeRecord& e) {
  advance_time(e.t);
  sketch_.update(e.u, e.v, e.w);
  double s = std::numeric_limits<double>::infinity();
  for (int r = 0; r < sketch_.rows(); ++r) {
    double d = edge_submatrix_density(sketch_.matrix(r),
                                      sketch_.row_index(r, e.u),
                                      sketch_.col_index(r, e.v));
    if (d < s) s = d;
  }
  return s;
}

std::size_t AnoEdgeG::state_bytes() const {
  return sizeof(*this) + (sketch_.state_bytes() - sizeof(HCms));
}

AnoEdgeL::AnoEdgeL(int n_r, int n_b, double decay_factor, std::uint64_t seed)
    : sketch_(n_r, n_b, seed), decay_(decay_factor) {
  if (!(decay_factor > 0.0) || decay_factor > 1.0)
    throw std::invalid_argument("decay factor must be in (0, 1]");
  // Separate engine from the sketch's so hash parameters and seed cells are
  // decoupled draws of the one user-facing seed.
  std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ull);
  subs_.reserve(std::size_t(n_r));
  for (int r = 0; r < n_r; ++r) {
    int row = int(rng() % std::uint64_t(n_b));
    int col = int(rng() % std::uint64_t(n_b));
    subs_.emplace_back(sketch_.matrix(r), row, col);
  }
}

void AnoEdgeL::advance_time(std::int64_t t) {
  if (!started_) {
    started_ = true;
    sketch_.set_last_tick(t);
    return;
  }
  if (t < sketch_.last_tick())
    throw StreamOrderError("edge timestamp older than stream head");
  if (t > sketch_.last_tick()) {
    std::int64_t dt = t - sketch_.last_tick();
    sketch_.decay(decay_, dt);
    double f = std::pow(decay_, double(dt));
    for (auto& sub : subs_) sub.on_matrix_scale(f);
  }
}

double AnoEdgeL::score(const EdgeRecord& e) {
  advance_time(e.t);
  sketch_.update(e.u, e.v, e.w);
  double s = std::numeric_limits<double>::infinity();
  for (int r = 0; r < sketch_.rows(); ++r) {
    const int row = sketch_.row_index(r, e.u);
    const int col = sketch_.col_index(r, e.v);
    subs_[r].on_matrix_update(row, col, e.w);
    expand(subs_[r], row, col);
    condense(subs_[r]);
    double l = likelihood(sketch_.matrix(r), row, col, subs_[r].rows(),
                          subs_[r].cols());
    if (l < s) s = l;
  }
  return s;
}

std::size_t AnoEdgeL::state_bytes() const {
  std::size_t bytes = sizeof(*this) + (sketch_.state_bytes() - sizeof(HCms));
  bytes += subs_.capacity() * sizeof(Submatrix);
  for (const auto& sub : subs_) bytes += sub.state_bytes() - sizeof(Submatrix);
  return bytes;
}

}  // namespace anosketch
