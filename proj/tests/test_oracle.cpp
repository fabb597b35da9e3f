#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "anosketch/errors.hpp"
#include "anosketch/oracle.hpp"
#include "anosketch/submatrix.hpp"
#include "doctest.h"

using namespace anosketch;

namespace {

CountMatrix make(const std::vector<std::vector<double>>& rows) {
  CountMatrix m(int(rows.size()));
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j) m.add(i, j, rows[i][j]);
  return m;
}

}  // namespace

TEST_CASE("exact counter accumulates and decays per key") {
  ExactCounter c;
  CHECK(c.count(1, 2) == 0.0);
  c.update(1, 2, 3.0);
  CHECK(c.count(1, 2) == doctest::Approx(3.0));
  c.decay(0.9, 1);
  CHECK(c.count(1, 2) == doctest::Approx(2.7));
  c.update(1, 2, 1.0);
  c.update(2, 1, 5.0);  // direction matters
  CHECK(c.count(1, 2) == doctest::Approx(3.7));
  CHECK(c.count(2, 1) == doctest::Approx(5.0));
  c.decay(0.5, 2);
  CHECK(c.count(2, 1) == doctest::Approx(1.25));
  CHECK_THROWS_AS(c.update(1, 1, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(c.decay(2.0, 1), std::invalid_argument);
}

TEST_CASE("exhaustive densest block on the worked example") {
  auto m = make({{9, 9, 0}, {9, 9, 0}, {0, 0, 1}});
  auto r = brute_densest(m);
  CHECK(r.density == doctest::Approx(18.0).epsilon(1e-12));
  CHECK(r.rows.count() == 2);
  CHECK(r.rows.contains(0));
  CHECK(r.rows.contains(1));
  CHECK(r.cols.count() == 2);
  CHECK(r.cols.contains(0));
  CHECK(r.cols.contains(1));
}

TEST_CASE("ties resolve to the first subsets in enumeration order") {
  CountMatrix z(2);
  auto r = brute_densest(z);
  CHECK(r.density == 0.0);
  CHECK(r.rows.count() == 1);
  CHECK(r.rows.contains(0));
  CHECK(r.cols.count() == 1);
  CHECK(r.cols.contains(0));

  // Identity matrix: {0}x{0}, {1}x{1} and the full block all hit 1.0.
  auto eye = make({{1, 0}, {0, 1}});
  auto t = brute_densest(eye);
  CHECK(t.density == doctest::Approx(1.0));
  CHECK(t.rows.count() == 1);
  CHECK(t.rows.contains(0));
  CHECK(t.cols.count() == 1);
  CHECK(t.cols.contains(0));
}

TEST_CASE("all-ones matrices are densest at full size") {
  auto ones = make({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}});
  auto r = brute_densest(ones);
  CHECK(r.density == doctest::Approx(3.0));
  CHECK(r.rows.count() == 3);
  CHECK(r.cols.count() == 3);
}

TEST_CASE("seeded exhaustive search pins the seed cell") {
  auto m = make({{9, 9, 0}, {9, 9, 0}, {0, 0, 1}});
  auto r = brute_seeded_densest(m, 2, 2);
  CHECK(r.density == doctest::Approx(37.0 / 3.0).epsilon(1e-12));
  CHECK(r.rows.count() == 3);
  CHECK(r.cols.count() == 3);

  auto s = brute_seeded_densest(m, 0, 0);
  CHECK(s.density == doctest::Approx(18.0).epsilon(1e-12));

  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 2 + int(rng() % 4);
    CountMatrix rm(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) rm.add(i, j, double(rng() % 100) / 10.0);
    int u = int(rng() % std::uint64_t(n)), v = int(rng() % std::uint64_t(n));
    auto sr = brute_seeded_densest(rm, u, v);
    CHECK(sr.rows.contains(u));
    CHECK(sr.cols.contains(v));
    CHECK(sr.density <= brute_densest(rm).density + 1e-12);
    CHECK(sr.density >= edge_submatrix_density(rm, u, v) - 1e-9);
  }
}

TEST_CASE("oracle sizes are bounded") {
  CHECK_THROWS_AS(brute_densest(CountMatrix(17)), SizeError);
  CHECK_THROWS_AS(brute_seeded_densest(CountMatrix(17), 0, 0), SizeError);
  CHECK_THROWS_AS(brute_seeded_densest(CountMatrix(3), 3, 0),
                  std::invalid_argument);
}

TEST_CASE("exhaustive optimum dominates any sampled block") {
  std::mt19937_64 rng(909);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 2 + int(rng() % 4);
    CountMatrix m(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (rng() % 2) m.add(i, j, double(rng() % 100) / 10.0);
    double opt = brute_densest(m).density;
    for (int s = 0; s < 20; ++s) {
      IndexSet rows(n), cols(n);
      for (int i = 0; i < n; ++i) {
        if (rng() % 2) rows.add(i);
        if (rng() % 2) cols.add(i);
      }
      if (rows.empty() || cols.empty()) continue;
      CHECK(density(m, rows, cols) <= opt + 1e-9 * std::max(1.0, opt));
    }
  }
}
