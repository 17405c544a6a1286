#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "fibspec/dimension.hpp"

using namespace fibspec;

namespace {

IntervalSet cantor_level(int k, double ratio) {
  std::vector<Interval> cur{{0, 1}};
  for (int j = 0; j < k; ++j) {
    std::vector<Interval> next;
    for (const auto& iv : cur) {
      const double w = iv.length() * ratio;
      next.push_back({iv.lo, iv.lo + w});
      next.push_back({iv.hi - w, iv.hi});
    }
    cur = std::move(next);
  }
  return IntervalSet::from_intervals(cur);
}

std::vector<ScaledCover> cantor_covers(int kmin, int kmax, double ratio) {
  std::vector<ScaledCover> out;
  for (int k = kmin; k <= kmax; ++k) out.push_back({k, std::pow(ratio, k), cantor_level(k, ratio)});
  return out;
}

}  // namespace

TEST_CASE("box_count examples") {
  CHECK(box_count(IntervalSet::single(0, 0.9), 0.25) == 4);
  for (double eps : {1e-3, 0.5, 7.0}) CHECK(box_count(IntervalSet::point(0.3), eps) == 1);
  // Closed intervals: the endpoints 1/3 and 2/3 fall in cells 1 and 2.
  CHECK(box_count(IntervalSet::from_intervals({{0, 1.0 / 3}, {2.0 / 3, 1}}), 1.0 / 3) == 4);
  CHECK(box_count(IntervalSet::single(-1, -0.5), 0.25) == 3);
  CHECK_THROWS_AS(box_count(IntervalSet::single(0, 1), 0), std::invalid_argument);
  CHECK_THROWS_AS(box_count(IntervalSet{}, 0.1), std::invalid_argument);
}

TEST_CASE("box regression on exact sets") {
  const auto covers = cantor_covers(4, 12, 1.0 / 3);
  const auto d = box_dim_regression(covers);
  CHECK(d.value == doctest::Approx(std::log(2.0) / std::log(3.0)).epsilon(0.02 / 0.6309));
  CHECK(d.levels_used.size() == 9);
  CHECK(d.method == DimensionMethod::box);

  std::vector<ScaledCover> nested, unit;
  for (int k = 3; k <= 12; ++k) {
    const double eps = std::ldexp(1.0, -k);
    nested.push_back({k, eps, IntervalSet::single(0, eps * 0.999)});
    unit.push_back({k, eps, IntervalSet::single(0, 1)});
  }
  const auto dn = box_dim_regression(nested);
  CHECK(dn.degenerate);
  CHECK(dn.value == 0.0);
  CHECK(box_dim_regression(unit).value == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("box regression preconditions") {
  auto covers = cantor_covers(4, 5, 1.0 / 3);
  CHECK_THROWS_AS(box_dim_regression(covers), std::invalid_argument);
  covers = cantor_covers(4, 6, 1.0 / 3);
  std::swap(covers[0], covers[1]);
  CHECK_THROWS_AS(box_dim_regression(covers), std::invalid_argument);
}

TEST_CASE("property: box regression is scale invariant") {
  const auto covers = cantor_covers(4, 11, 1.0 / 3);
  const double base = box_dim_regression(covers).value;
  for (double factor : {0.125, 4.0, 1024.0}) {
    std::vector<ScaledCover> scaled;
    for (const auto& c : covers) scaled.push_back({c.level, c.eps * factor, c.set.scaled(factor)});
    CHECK(std::abs(box_dim_regression(scaled).value - base) < 1e-9);
  }
}

TEST_CASE("moran examples") {
  const double third = 1.0 / 3, quarter = 0.25;
  CHECK(moran_exponent(std::vector<double>{third, third}) ==
        doctest::Approx(std::log(2.0) / std::log(3.0)).epsilon(1e-10));
  CHECK(moran_exponent(std::vector<double>{quarter, quarter, quarter, quarter}) ==
        doctest::Approx(1.0).epsilon(1e-10));
  CHECK(moran_exponent(std::vector<double>{0.5}) == 0.0);

  const auto one = moran_dim(IntervalSet::single(0, 0.5));
  CHECK(one.value == 0.0);
  CHECK(one.degenerate);
  CHECK(one.method == DimensionMethod::moran);
  CHECK_THROWS_AS(moran_dim(IntervalSet::single(0, 1.5)), std::invalid_argument);
}

TEST_CASE("property: adding a band increases the Moran exponent") {
  std::vector<double> w{0.1, 0.2};
  double prev = moran_exponent(w);
  for (double extra : {0.05, 0.01, 0.3, 0.002}) {
    w.push_back(extra);
    const double cur = moran_exponent(w);
    CHECK(cur > prev);
    prev = cur;
  }
}

TEST_CASE("property: Moran and box estimates agree on self-similar sets") {
  for (double ratio : {1.0 / 3, 0.25}) {
    const double box = box_dim_regression(cantor_covers(4, 12, ratio)).value;
    const double moran = moran_dim(cantor_level(6, ratio)).value;
    CHECK(std::abs(box - moran) <= 0.03);
  }
}
