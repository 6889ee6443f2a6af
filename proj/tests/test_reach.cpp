#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "armkin/reach.hpp"

using namespace armkin;

TEST_CASE("reach_closed examples") {
  ReachInterval a = reach_closed({3, 2, 1});
  CHECK(a.lo == 0.0);
  CHECK(a.hi == 6.0);
  ReachInterval b = reach_closed({5, 1, 1});
  CHECK(b.lo == 3.0);
  CHECK(b.hi == 7.0);
  ReachInterval c = reach_closed({4});
  CHECK(c.lo == 4.0);
  CHECK(c.hi == 4.0);
  CHECK_THROWS_AS(reach_closed({}), ValidationError);
  CHECK_THROWS_AS(reach_recursive({}), ValidationError);
}

TEST_CASE("reach_recursive accumulates from the outermost segment") {
  auto r1 = reach_recursive({1});
  REQUIRE(r1.size() == 1);
  CHECK(r1[0].lo == 1.0);
  CHECK(r1[0].hi == 1.0);

  auto r2 = reach_recursive({1, 2});
  REQUIRE(r2.size() == 2);
  CHECK(r2[1].lo == 1.0);
  CHECK(r2[1].hi == 3.0);

  auto r3 = reach_recursive({1, 1, 5});
  REQUIRE(r3.size() == 3);
  CHECK(r3[1].lo == 0.0);
  CHECK(r3[1].hi == 2.0);
  CHECK(r3[2].lo == 3.0);
  CHECK(r3[2].hi == 7.0);
}

TEST_CASE("closed form equals the recursion on random multisets") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> len(0.01, 100.0);
  for (int trial = 0; trial < 10000; ++trial) {
    std::size_t n = 2 + static_cast<std::size_t>(trial % 9);
    std::vector<double> l(n);
    for (double& x : l) x = len(rng);
    ReachInterval closed = reach_closed(l);
    ReachInterval rec = reach_recursive(l).back();
    double scale = closed.hi;
    CHECK(std::abs(closed.lo - rec.lo) <= 1e-12 * scale);
    CHECK(std::abs(closed.hi - rec.hi) <= 1e-12 * scale);

    std::shuffle(l.begin(), l.end(), rng);
    ReachInterval shuffled = reach_closed(l);
    CHECK(std::abs(shuffled.lo - closed.lo) <= 1e-12 * scale);
    CHECK(std::abs(shuffled.hi - closed.hi) <= 1e-12 * scale);
  }
}

TEST_CASE("lower reach bounds every signed sum") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> len(0.01, 10.0);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t n = 1 + static_cast<std::size_t>(trial % 8);
    std::vector<double> l(n);
    for (double& x : l) x = len(rng);
    ReachInterval r = reach_closed(l);
    for (unsigned mask = 0; mask < (1U << n); ++mask) {
      double s = 0.0;
      for (std::size_t i = 0; i < n; ++i) s += ((mask >> i) & 1U) ? -l[i] : l[i];
      CHECK(r.lo <= std::abs(s) + 1e-12 * r.hi);
    }
  }
}

TEST_CASE("ReachInterval::contains") {
  ReachInterval r = reach_closed({5, 1, 1});
  CHECK(r.contains(3.0, 0.0));
  CHECK(r.contains(7.0, 0.0));
  CHECK_FALSE(r.contains(2.9, 0.0));
  CHECK(r.contains(2.9, 0.2));
}
