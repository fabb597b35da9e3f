#pragma once

#include <utility>
#include <vector>

#include "anosketch/matrix.hpp"

namespace anosketch {

/// Subset of [0, capacity) kept as membership flags plus a count.
class IndexSet {
 public:
  explicit IndexSet(int capacity) : member_(capacity, 0) {}

  static IndexSet full(int capacity) {
    IndexSet s(capacity);
    for (auto& m : s.member_) m = 1;
    s.count_ = capacity;
    return s;
  }

  int capacity() const { return int(member_.size()); }
  int count() const { return count_; }
  bool empty() const { return count_ == 0; }
  bool contains(int i) const { return member_[i] != 0; }

  void add(int i) {
    if (!member_[i]) {
      member_[i] = 1;
      ++count_;
    }
  }

  void remove(int i) {
    if (member_[i]) {
      member_[i] = 0;
      --count_;
    }
  }

  std::size_t state_bytes() const {
    return sizeof(*this) + member_.capacity();
  }

 private:
  std::vector<char> member_;
  int count_ = 0;
};

/// Sum of m over rows x cols divided by sqrt(|rows| * |cols|).
/// Throws UndefinedDensityError when either set is empty.
double density(const CountMatrix& m, const IndexSet& rows, const IndexSet& cols);

/// Sum of row `row` restricted to cols (cols may be empty; the sum is 0).
double row_sum(const CountMatrix& m, int row, const IndexSet& cols);

/// Sum of column `col` restricted to rows.
double col_sum(const CountMatrix& m, const IndexSet& rows, int col);

/// Mean of m over the cross cells (rows x {col}) union ({row} x cols); the
/// shared cell is counted once.  Throws UndefinedDensityError when both sets
/// are empty.
double likelihood(const CountMatrix& m, int row, int col, const IndexSet& rows,
                  const IndexSet& cols);

/// Row/column block of a backing matrix with cached sums.  row_sums(i) is
/// kept for every i (sum of row i over the current cols), col_sums(j) for
/// every j, so growth candidates can be ranked without rescanning; total is
/// the block sum.  The backing matrix must outlive the submatrix, and any
/// mutation of it must be mirrored via on_matrix_update / on_matrix_scale.
class Submatrix {
 public:
  /// 1x1 block holding the seed cell.
  Submatrix(const CountMatrix& m, int row, int col);

  /// Block covering the whole matrix.
  explicit Submatrix(const CountMatrix& m);

  const IndexSet& rows() const { return rows_; }
  const IndexSet& cols() const { return cols_; }
  const CountMatrix& matrix() const { return *m_; }

  double total() const { return total_; }
  double density() const;

  double row_sum(int i) const { return row_sums_[i]; }
  double col_sum(int j) const { return col_sums_[j]; }

  void add_row(int i);
  void add_col(int j);
  void remove_row(int i);
  void remove_col(int j);

  /// Cell (i, j) of the backing matrix grew by w.
  void on_matrix_update(int i, int j, double w);

  /// Every cell of the backing matrix was scaled by factor.
  void on_matrix_scale(double factor);

  std::size_t state_bytes() const;

 private:
  const CountMatrix* m_;
  IndexSet rows_, cols_;
  std::vector<double> row_sums_, col_sums_;
  double total_;
};

/// Densest block found by greedy growth from the 1x1 seed (row, col): at
/// each step the best remaining row (by sum over current cols) competes with
/// the best remaining column, the winner joins the block, and the maximum
/// density seen along the way is returned.  Ties between equal-sum rows (or
/// columns) go to the lowest index; a row beats the column only when its sum
/// is strictly larger.  O(n_b^2) via the cached sums.  When `path` is given
/// it receives the addition sequence as ('r'/'c', index) pairs.
double edge_submatrix_density(const CountMatrix& m, int row, int col,
                              std::vector<std::pair<char, int>>* path = nullptr);

}  // namespace anosketch
