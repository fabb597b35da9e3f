#include "anosketch/submatrix.hpp"

#include <cmath>
#include <limits>

#include "anosketch/errors.hpp"

namespace anosketch {

double density(const CountMatrix& m, const IndexSet& rows, const IndexSet& cols) {
  if (rows.empty() || cols.empty())
    throw UndefinedDensityError("density over an empty index set");
  double sum = 0.0;
  for (int i = 0; i < m.size(); ++i) {
    if (!rows.contains(i)) continue;
    for (int j = 0; j < m.size(); ++j)
      if (cols.contains(j)) sum += m.at(i, j);
  }
  return sum / std::sqrt(double(rows.count()) * double(cols.count()));
}

double row_sum(const CountMatrix& m, int row, const IndexSet& cols) {
  double sum = 0.0;
  for (int j = 0; j < m.size(); ++j)
    if (cols.contains(j)) sum += m.at(row, j);
  return sum;
}

double col_sum(const CountMatrix& m, const IndexSet& rows, int col) {
  double sum = 0.0;
  for (int i = 0; i < m.size(); ++i)
    if (rows.contains(i)) sum += m.at(i, col);
  return sum;
}

double likelihood(const CountMatrix& m, int row, int col, const IndexSet& rows,
                  const IndexSet& cols) {
  bool overlap = rows.contains(row) && cols.contains(col);
  int cells = rows.count() + cols.count() - (overlap ? 1 : 0);
  if (cells == 0)
    throw UndefinedDensityError("likelihood over an empty cell set");
  double sum = col_sum(m, rows, col) + row_sum(m, row, cols);
  if (overlap) sum -= m.at(row, col);
  return sum / double(cells);
}

Submatrix::Submatrix(const CountMatrix& m, int row, int col)
    : m_(&m),
      rows_(m.size()),
      cols_(m.size()),
      row_sums_(m.size()),
      col_sums_(m.size()),
      total_(m.at(row, col)) {
  rows_.add(row);
  cols_.add(col);
  for (int i = 0; i < m.size(); ++i) row_sums_[i] = m.at(i, col);
  for (int j = 0; j < m.size(); ++j) col_sums_[j] = m.at(row, j);
}

Submatrix::Submatrix(const CountMatrix& m)
    : m_(&m),
      rows_(IndexSet::full(m.size())),
      cols_(IndexSet::full(m.size())),
      row_sums_(m.size(), 0.0),
      col_sums_(m.size(), 0.0),
      total_(0.0) {
  for (int i = 0; i < m.size(); ++i) {
    for (int j = 0; j < m.size(); ++j) {
      double c = m.at(i, j);
      row_sums_[i] += c;
      col_sums_[j] += c;
      total_ += c;
    }
  }
}

double Submatrix::density() const {
  if (rows_.empty() || cols_.empty())
    throw UndefinedDensityError("density of an empty submatrix");
  return total_ / std::sqrt(double(rows_.count()) * double(cols_.count()));
}

void Submatrix::add_row(int i) {
  if (rows_.contains(i)) return;
  rows_.add(i);
  total_ += row_sums_[i];
  for (int j = 0; j < m_->size(); ++j) col_sums_[j] += m_->at(i, j);
}

void Submatrix::add_col(int j) {
  if (cols_.contains(j)) return;
  cols_.add(j);
  total_ += col_sums_[j];
  for (int i = 0; i < m_->size(); ++i) row_sums_[i] += m_->at(i, j);
}

void Submatrix::remove_row(int i) {
  if (!rows_.contains(i)) return;
  rows_.remove(i);
  total_ -= row_sums_[i];
  for (int j = 0; j < m_->size(); ++j) col_sums_[j] -= m_->at(i, j);
}

void Submatrix::remove_col(int j) {
  if (!cols_.contains(j)) return;
  cols_.remove(j);
  total_ -= col_sums_[j];
  for (int i = 0; i < m_->size(); ++i) row_sums_[i] -= m_->at(i, j);
}

void Submatrix::on_matrix_update(int i, int j, double w) {
  if (cols_.contains(j)) row_sums_[i] += w;
  if (rows_.contains(i)) col_sums_[j] += w;
  if (rows_.contains(i) && cols_.contains(j)) total_ += w;
}

void Submatrix::on_matrix_scale(double factor) {
  if (factor == 1.0) return;
  for (double& s : row_sums_) {
    s *= factor;
    if (s < kCountFloor) s = 0.0;
  }
  for (double& s : col_sums_) {
    s *= factor;
    if (s < kCountFloor) s = 0.0;
  }
  total_ *= factor;
  if (total_ < kCountFloor) total_ = 0.0;
}

std::size_t Submatrix::state_bytes() const {
  return sizeof(*this) + (rows_.state_bytes() - sizeof(IndexSet)) +
         (cols_.state_bytes() - sizeof(IndexSet)) +
         row_sums_.capacity() * sizeof(double) +
         col_sums_.capacity() * sizeof(double);
}

double edge_submatrix_density(const CountMatrix& m, int row, int col,
                              std::vector<std::pair<char, int>>* path) {
  constexpr double kNone = -std::numeric_limits<double>::infinity();
  const int n = m.size();
  Submatrix sub(m, row, col);
  double best = sub.density();
  int rem_rows = n - 1, rem_cols = n - 1;
  while (rem_rows > 0 || rem_cols > 0) {
    int best_row = -1;
    double best_row_sum = kNone;
    if (rem_rows > 0) {
      for (int i = 0; i < n; ++i)
        if (!sub.rows().contains(i) && sub.row_sum(i) > best_row_sum) {
          best_row_sum = sub.row_sum(i);
          best_row = i;
        }
    }
    int best_col = -1;
    double best_col_sum = kNone;
    if (rem_cols > 0) {
      for (int j = 0; j < n; ++j)
        if (!sub.cols().contains(j) && sub.col_sum(j) > best_col_sum) {
          best_col_sum = sub.col_sum(j);
          best_col = j;
        }
    }
    // Strict: a tied row loses to the column.
    if (best_row_sum > best_col_sum) {
      sub.add_row(best_row);
      --rem_rows;
      if (path) path->emplace_back('r', best_row);
    } else {
      sub.add_col(best_col);
      --rem_cols;
      if (path) path->emplace_back('c', best_col);
    }
    double d = sub.density();
    if (d > best) best = d;
  }
  return best;
}

}  // namespace anosketch
