#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "fibspec/errors.hpp"
#include "fibspec/sumset.hpp"

using namespace fibspec;

namespace {

// Brute-force oracle: every pairwise interval, then normalization.
IntervalSet pairwise_sum(const IntervalSet& a, const IntervalSet& b) {
  std::vector<Interval> all;
  for (const auto& x : a.intervals())
    for (const auto& y : b.intervals()) all.push_back({x.lo + y.lo, x.hi + y.hi});
  return IntervalSet::from_intervals(all);
}

IntervalSet random_set(std::mt19937_64& rng, int n, double scale) {
  std::uniform_real_distribution<double> u(0, scale);
  std::vector<Interval> v;
  for (int i = 0; i < n; ++i) {
    const double a = u(rng), w = u(rng) * 0.05;
    v.push_back({a, a + w});
  }
  return IntervalSet::from_intervals(v);
}

// Endpoints on a 2^-10 grid, so sums and translations are exact in double.
IntervalSet dyadic_set(std::mt19937_64& rng, int n) {
  std::vector<Interval> v;
  for (int i = 0; i < n; ++i) {
    const double a = std::ldexp(static_cast<double>(rng() % 4096), -10);
    const double w = std::ldexp(static_cast<double>(rng() % 64), -10);
    v.push_back({a, a + w});
  }
  return IntervalSet::from_intervals(v);
}

void check_same_report(const TheoremReport& a, const TheoremReport& b) {
  CHECK(a.hd1_est.value == b.hd1_est.value);
  CHECK(a.hd2_est.value == b.hd2_est.value);
  CHECK(a.sum_dim_est.value == b.sum_dim_est.value);
  CHECK(a.sum_dim_est.slope_stderr == b.sum_dim_est.slope_stderr);
  CHECK(a.moran1_est.value == b.moran1_est.value);
  CHECK(a.rhs == b.rhs);
  CHECK(a.gap == b.gap);
  CHECK(a.levels == b.levels);
  CHECK(a.scales == b.scales);
  CHECK(a.cover1 == b.cover1);
  CHECK(a.sum_cover == b.sum_cover);
}

}  // namespace

TEST_CASE("minkowski sum examples") {
  const auto unit = IntervalSet::single(0, 1);
  CHECK(minkowski_sum(unit, unit) == IntervalSet::single(0, 2));
  const auto thirds = IntervalSet::from_intervals({{0, 1.0 / 3}, {2.0 / 3, 1}});
  CHECK(minkowski_sum(thirds, thirds) == IntervalSet::single(0, 2));
  const auto quarters = IntervalSet::from_intervals({{0, 0.25}, {0.75, 1}});
  CHECK(minkowski_sum(quarters, quarters) ==
        IntervalSet::from_intervals({{0, 0.5}, {0.75, 1.25}, {1.5, 2}}));
  CHECK_THROWS_AS(minkowski_sum(IntervalSet{}, unit), std::invalid_argument);
}

TEST_CASE("minkowski sum matches the pairwise oracle") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 50; ++i) {
    const auto a = random_set(rng, 40, 10), b = random_set(rng, 30, 3);
    REQUIRE(minkowski_sum(a, b) == pairwise_sum(a, b));
    REQUIRE(minkowski_sum(a, b) == minkowski_sum(b, a));
  }
}

TEST_CASE("minkowski sum properties") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 50; ++i) {
    const auto a = dyadic_set(rng, 25), b = dyadic_set(rng, 25);
    REQUIRE(minkowski_sum(IntervalSet::point(0), b) == b);
    const auto s = minkowski_sum(a, b);
    REQUIRE(s.total_length() >= std::max(a.total_length(), b.total_length()));
    const double t = 0.375;
    REQUIRE(minkowski_sum(a.translated(t), b) == s.translated(t));
  }
}

TEST_CASE("minkowski sum pair cap") {
  std::vector<Interval> many;
  for (int i = 0; i < 4000; ++i) many.push_back({3.0 * i, 3.0 * i + 1});
  const auto big = IntervalSet::from_intervals(many);
  CHECK_THROWS_AS(minkowski_sum(big, big), SizeCapExceeded);
}

TEST_CASE("theorem check: small coupling sums are intervals") {
  const auto sq = check_theorem_square(0.2, 14);
  CHECK(sq.sum_cover.size() == 1);
  CHECK(sq.sum_dim_est.value >= 0.98);
  const auto rect = check_theorem_rect(0.2, 0.3, 14);
  CHECK(rect.sum_dim_est.value >= 0.98);
}

TEST_CASE("theorem check: large coupling gap") {
  const auto sq = check_theorem_square(20, 12);
  CHECK(std::abs(sq.gap) <= 0.05);
  CHECK(sq.sum_dim_est.value <= std::min(2 * sq.hd1_est.value, 1.0) + 0.05);
  CHECK(sq.rhs >= 0.0);
  CHECK(sq.rhs <= 1.0);
  CHECK(sq.levels == std::vector<int>{9, 10, 11, 12});
  const auto rect = check_theorem_rect(20, 30, 12);
  CHECK(std::abs(rect.gap) <= 0.05);
  CHECK(std::isfinite(rect.gap));
}

TEST_CASE("theorem check: square and diagonal rectangle agree") {
  check_same_report(check_theorem_square(7, 10), check_theorem_rect(7, 7, 10));
}

TEST_CASE("theorem check: sum covers nest") {
  const auto a = check_theorem_square(6, 9).sum_cover;
  const auto b = check_theorem_square(6, 10).sum_cover;
  CHECK(b.is_subset_of(a.dilated(1e-9)));
}

TEST_CASE("theorem check preconditions") {
  CHECK_THROWS_AS(check_theorem_square(5, 17), std::invalid_argument);
  CHECK_THROWS_AS(check_theorem_square(0, 8), std::invalid_argument);
  CHECK_THROWS_AS(check_theorem_rect(5, 5, 1), std::invalid_argument);
}
