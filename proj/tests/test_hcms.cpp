#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "anosketch/hcms.hpp"
#include "anosketch/oracle.hpp"
#include "doctest.h"

using namespace anosketch;

TEST_CASE("construction gives zeroed matrices of the requested shape") {
  HCms s(2, 32, 42);
  CHECK(s.rows() == 2);
  CHECK(s.buckets() == 32);
  for (int r = 0; r < 2; ++r) {
    CHECK(s.matrix(r).size() == 32);
    CHECK(s.matrix(r).total() == 0.0);
  }
  HCms tiny(1, 2, 0);
  CHECK(tiny.rows() == 1);
  CHECK(tiny.buckets() == 2);
  CHECK(tiny.estimate(123, 456) == 0.0);
}

TEST_CASE("bad shapes and parameters are rejected") {
  CHECK_THROWS_AS(HCms(0, 32, 1), std::invalid_argument);
  CHECK_THROWS_AS(HCms(2, 1, 1), std::invalid_argument);
  HCms s(1, 4, 7);
  CHECK_THROWS_AS(s.update(1, 2, -0.5), std::invalid_argument);
  CHECK_THROWS_AS(s.decay(0.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(s.decay(1.5, 1), std::invalid_argument);
  CHECK_THROWS_AS(s.decay(0.9, -1), std::invalid_argument);
}

TEST_CASE("same seed reproduces hash placement, different seeds disagree") {
  HCms a(2, 32, 42), b(2, 32, 42), c(2, 32, 43);
  bool all_same = true, any_diff = false;
  for (std::uint64_t x = 0; x < 1000; ++x) {
    for (int r = 0; r < 2; ++r) {
      if (a.row_index(r, x) != b.row_index(r, x) ||
          a.col_index(r, x) != b.col_index(r, x))
        all_same = false;
      if (a.row_index(r, x) != c.row_index(r, x) ||
          a.col_index(r, x) != c.col_index(r, x))
        any_diff = true;
    }
  }
  CHECK(all_same);
  CHECK(any_diff);
}

TEST_CASE("single update with room to spare estimates exactly") {
  HCms s(2, 32, 42);
  s.update(10, 20, 7.0);
  CHECK(s.estimate(10, 20) == doctest::Approx(7.0));
  // One cell per matrix moved, nothing else.
  for (int r = 0; r < 2; ++r) CHECK(s.matrix(r).total() == doctest::Approx(7.0));
}

TEST_CASE("estimate is the min across hash rows") {
  HCms s(3, 8, 5);
  s.update(1, 2, 4.0);
  s.update(3, 4, 2.0);
  double est = s.estimate(1, 2);
  for (int r = 0; r < 3; ++r) {
    double cell = s.matrix(r).at(s.row_index(r, 1), s.col_index(r, 2));
    CHECK(est <= cell + 1e-12);
  }
  CHECK(est >= 4.0 - 1e-12);
}

TEST_CASE("estimates never fall below exact decayed counts under collisions") {
  // Two buckets per side force heavy collisions.
  HCms s(2, 2, 99);
  ExactCounter exact;
  std::mt19937_64 rng(7);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> keys;
  for (int i = 0; i < 20; ++i) keys.push_back({rng() % 50, rng() % 50});
  for (int step = 0; step < 5000; ++step) {
    auto [u, v] = keys[rng() % keys.size()];
    double w = double(rng() % 100) / 10.0;
    s.update(u, v, w);
    exact.update(u, v, w);
    if (step % 250 == 0) {
      s.decay(0.9, 1);
      exact.decay(0.9, 1);
    }
    if (step % 500 == 0) {
      for (auto [ku, kv] : keys) {
        double e = exact.count(ku, kv);
        CHECK(s.estimate(ku, kv) >= e - 1e-9 * std::max(1.0, e));
      }
    }
  }
}

TEST_CASE("decay multiplies every cell by factor^elapsed") {
  HCms s(1, 4, 3);
  s.update(0, 1, 10.0);
  s.update(5, 6, 4.0);
  double before = s.matrix(0).total();
  s.decay(0.9, 3);
  CHECK(s.matrix(0).total() ==
        doctest::Approx(before * std::pow(0.9, 3)).epsilon(1e-12));

  SUBCASE("factor one or zero elapsed changes nothing") {
    double t = s.matrix(0).total();
    s.decay(1.0, 5);
    CHECK(s.matrix(0).total() == t);
    s.decay(0.5, 0);
    CHECK(s.matrix(0).total() == t);
  }
}

TEST_CASE("split decays compose like a single one") {
  HCms a(1, 4, 11), b(1, 4, 11);
  a.update(1, 2, 5.0);
  b.update(1, 2, 5.0);
  a.decay(0.8, 3);
  a.decay(0.8, 4);
  b.decay(0.8, 7);
  CHECK(a.estimate(1, 2) == doctest::Approx(b.estimate(1, 2)).epsilon(1e-12));
  CHECK(a.last_tick() == b.last_tick());
}

TEST_CASE("reset zeroes counts but keeps the hash functions") {
  HCms s(2, 8, 21);
  s.update(4, 5, 3.0);
  int r0 = s.row_index(0, 4), c0 = s.col_index(0, 5);
  s.reset();
  CHECK(s.matrix(0).total() == 0.0);
  CHECK(s.matrix(1).total() == 0.0);
  CHECK(s.row_index(0, 4) == r0);
  CHECK(s.col_index(0, 5) == c0);
  s.update(4, 5, 2.0);
  CHECK(s.matrix(0).at(r0, c0) == doctest::Approx(2.0));
}

TEST_CASE("state footprint does not grow with the update count") {
  HCms s(2, 32, 42);
  for (int i = 0; i < 10; ++i) s.update(i, i + 1, 1.0);
  std::size_t early = s.state_bytes();
  std::mt19937_64 rng(3);
  for (int i = 0; i < 1000000; ++i) s.update(rng(), rng(), 1.0);
  CHECK(s.state_bytes() == early);
}

TEST_CASE("csv dump has one block per hash row") {
  HCms s(2, 4, 9);
  s.update(1, 2, 2.5);
  std::ostringstream os;
  s.dump_csv(os);
  std::istringstream is(os.str());
  std::string line;
  int rows = 0, blanks = 0;
  while (std::getline(is, line)) {
    if (line.empty()) {
      ++blanks;
      continue;
    }
    ++rows;
    CHECK(std::count(line.begin(), line.end(), ',') == 3);
  }
  CHECK(rows == 8);
  CHECK(blanks == 1);
}
