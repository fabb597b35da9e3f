#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cmath>
#include <random>

#include "anosketch/anograph.hpp"
#include "anosketch/oracle.hpp"
#include "doctest.h"

using namespace anosketch;

namespace {

CountMatrix make(const std::vector<std::vector<double>>& rows) {
  CountMatrix m(int(rows.size()));
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j) m.add(i, j, rows[i][j]);
  return m;
}

CountMatrix random_matrix(int n, std::mt19937_64& rng, int zero_in = 1) {
  CountMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (int(rng() % std::uint64_t(zero_in)) == 0)
        m.add(i, j, double(rng() % 1000) / 20.0);
  return m;
}

GraphSnapshot snapshot(std::initializer_list<EdgeRecord> edges) {
  GraphSnapshot g;
  g.edges = edges;
  return g;
}

}  // namespace

TEST_CASE("peeling finds the planted block on the worked example") {
  auto m = make({{9, 9, 0}, {9, 9, 0}, {0, 0, 1}});
  CHECK(anograph_density(m) == doctest::Approx(18.0).epsilon(1e-12));
}

TEST_CASE("peeling a zero matrix yields zero") {
  CountMatrix z(5);
  CHECK(anograph_density(z) == 0.0);
}

TEST_CASE("uniform matrices peak at the full block") {
  CountMatrix m(6);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) m.add(i, j, 2.5);
  CHECK(anograph_density(m) == doctest::Approx(2.5 * 6.0).epsilon(1e-12));
}

TEST_CASE("peeled density is a 2-approximation of the exhaustive optimum") {
  std::mt19937_64 rng(606);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 2 + int(rng() % 4);
    auto m = random_matrix(n, rng, 1 + int(trial % 3));
    double opt = brute_densest(m).density;
    double got = anograph_density(m);
    CHECK(got <= opt + 1e-9 * std::max(1.0, opt));
    CHECK(got >= opt / 2.0 - 1e-9 * std::max(1.0, opt));
  }
}

TEST_CASE("every nonzero 3x3 binary matrix respects the guarantee") {
  for (unsigned mask = 1; mask < (1u << 9); ++mask) {
    CountMatrix m(3);
    for (int c = 0; c < 9; ++c)
      if (mask >> c & 1u) m.add(c / 3, c % 3, 1.0);
    double opt = brute_densest(m).density;
    double got = anograph_density(m);
    REQUIRE(got <= opt + 1e-12);
    REQUIRE(got >= opt / 2.0 - 1e-12);
  }
}

TEST_CASE("seeded search from the top cells matches the worked example") {
  auto m = make({{9, 9, 0}, {9, 9, 0}, {0, 0, 1}});
  CHECK(anograph_k_density(m, 1) == doctest::Approx(18.0).epsilon(1e-12));
  CHECK(anograph_k_density(m, 9) == doctest::Approx(18.0).epsilon(1e-12));
}

TEST_CASE("seed count is validated and zero matrices score zero") {
  CountMatrix z(3);
  CHECK(anograph_k_density(z, 1) == 0.0);
  CHECK(anograph_k_density(z, 9) == 0.0);
  CHECK_THROWS_AS(anograph_k_density(z, 0), std::invalid_argument);
  CHECK_THROWS_AS(anograph_k_density(z, 10), std::invalid_argument);
}

TEST_CASE("more seeds never hurt and never beat the optimum") {
  std::mt19937_64 rng(2121);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 3 + int(rng() % 3);
    auto m = random_matrix(n, rng, 2);
    double opt = brute_densest(m).density;
    double prev = 0.0;
    for (int k = 1; k <= n * n; k += 3) {
      double d = anograph_k_density(m, k);
      CHECK(d >= prev - 1e-12);
      CHECK(d <= opt + 1e-9 * std::max(1.0, opt));
      prev = d;
    }
  }
}

TEST_CASE("empty snapshots score zero") {
  AnoGraph g(2, 8, 42);
  CHECK(g.score(snapshot({})) == 0.0);
  AnoGraphK gk(2, 8, 5, 42);
  CHECK(gk.score(snapshot({})) == 0.0);
}

TEST_CASE("a single weighted edge scores its weight") {
  AnoGraph g(1, 32, 9);
  CHECK(g.score(snapshot({EdgeRecord{4, 7, 5.0, 0}})) == doctest::Approx(5.0));
  AnoGraphK gk(1, 32, 5, 9);
  CHECK(gk.score(snapshot({EdgeRecord{4, 7, 5.0, 0}})) == doctest::Approx(5.0));
}

TEST_CASE("snapshot scores ignore edge order") {
  std::mt19937_64 rng(5);
  GraphSnapshot a;
  for (int i = 0; i < 200; ++i)
    a.edges.push_back({std::uint32_t(rng() % 20), std::uint32_t(rng() % 20),
                       double(rng() % 50) / 10.0, 0});
  GraphSnapshot b = a;
  std::reverse(b.edges.begin(), b.edges.end());
  AnoGraph g(2, 16, 1);
  double sa = g.score(a);
  double sb = g.score(b);
  CHECK(sa == doctest::Approx(sb).epsilon(1e-12));
}

TEST_CASE("scaling all weights scales the snapshot score") {
  std::mt19937_64 rng(17);
  GraphSnapshot a, b;
  for (int i = 0; i < 150; ++i) {
    EdgeRecord e{std::uint32_t(rng() % 15), std::uint32_t(rng() % 15),
                 double(rng() % 90 + 10) / 10.0, 0};
    a.edges.push_back(e);
    e.w *= 4.0;
    b.edges.push_back(e);
  }
  AnoGraph g(2, 16, 23);
  CHECK(g.score(b) == doctest::Approx(4.0 * g.score(a)).epsilon(1e-9));
  AnoGraphK gk(2, 16, 5, 23);
  CHECK(gk.score(b) == doctest::Approx(4.0 * gk.score(a)).epsilon(1e-9));
}

TEST_CASE("each snapshot is scored against a fresh sketch") {
  AnoGraph g(2, 16, 3);
  GraphSnapshot heavy;
  for (int i = 0; i < 100; ++i) heavy.edges.push_back({1, 2, 10.0, 0});
  double first = g.score(heavy);
  g.score(snapshot({EdgeRecord{5, 6, 1.0, 1}}));
  CHECK(g.score(heavy) == doctest::Approx(first).epsilon(1e-12));
}

TEST_CASE("planted dense snapshots outscore sparse ones") {
  std::mt19937_64 rng(33);
  GraphSnapshot sparse, dense;
  for (int i = 0; i < 300; ++i)
    sparse.edges.push_back({std::uint32_t(rng() % 100),
                            std::uint32_t(rng() % 100), 1.0, 0});
  dense = sparse;
  for (int i = 0; i < 300; ++i)
    dense.edges.push_back(
        {std::uint32_t(rng() % 5), std::uint32_t(rng() % 5), 1.0, 0});
  AnoGraph g(2, 32, 8);
  CHECK(g.score(dense) > g.score(sparse));
  AnoGraphK gk(2, 32, 5, 8);
  CHECK(gk.score(dense) > gk.score(sparse));
}
