#include "anosketch/hcms.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace anosketch {

HCms::HCms(int n_r, int n_b, std::uint64_t seed) : n_r_(n_r), n_b_(n_b) {
  if (n_r < 1) throw std::invalid_argument("hcms: need at least one hash row");
  if (n_b < 2) throw std::invalid_argument("hcms: need at least two buckets");
  std::mt19937_64 rng(seed);
  row_hash_.reserve(n_r);
  col_hash_.reserve(n_r);
  matrices_.reserve(n_r);
  for (int r = 0; r < n_r; ++r) {
    row_hash_.emplace_back(n_b, rng);
    col_hash_.emplace_back(n_b, rng);
    matrices_.emplace_back(n_b);
  }
}

void HCms::update(std::uint64_t u, std::uint64_t v, double w) {
  if (w < 0.0) throw std::invalid_argument("hcms: negative edge weight");
  for (int r = 0; r < n_r_; ++r)
    matrices_[r].add(row_hash_[r](u), col_hash_[r](v), w);
}

void HCms::decay(double factor, std::int64_t elapsed_ticks) {
  if (!(factor > 0.0) || factor > 1.0)
    throw std::invalid_argument("hcms: decay factor must be in (0, 1]");
  if (elapsed_ticks < 0)
    throw std::invalid_argument("hcms: negative elapsed ticks");
  double f = std::pow(factor, double(elapsed_ticks));
  for (auto& m : matrices_) m.scale(f);
  last_tick_ += elapsed_ticks;
}

void HCms::reset() {
  for (auto& m : matrices_) m.clear();
}

double HCms::estimate(std::uint64_t u, std::uint64_t v) const {
  double est = matrices_[0].at(row_hash_[0](u), col_hash_[0](v));
  for (int r = 1; r < n_r_; ++r) {
    double c = matrices_[r].at(row_hash_[r](u), col_hash_[r](v));
    if (c < est) est = c;
  }
  return est;
}

std::size_t HCms::state_bytes() const {
  std::size_t bytes = sizeof(*this);
  bytes += row_hash_.capacity() * sizeof(HashFunction);
  bytes += col_hash_.capacity() * sizeof(HashFunction);
  bytes += matrices_.capacity() * sizeof(CountMatrix);
  for (const auto& m : matrices_) bytes += m.state_bytes() - sizeof(CountMatrix);
  return bytes;
}

void HCms::dump_csv(std::ostream& os) const {
  char buf[32];
  for (int r = 0; r < n_r_; ++r) {
    if (r > 0) os << '\n';
    for (int i = 0; i < n_b_; ++i) {
      for (int j = 0; j < n_b_; ++j) {
        std::snprintf(buf, sizeof(buf), "%.17g", matrices_[r].at(i, j));
        os << (j ? "," : "") << buf;
      }
      os << '\n';
    }
  }
}

}  // namespace anosketch
