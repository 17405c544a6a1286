#include <limits>
#include <stdexcept>

#include "doctest.h"
#include "fibspec/interval_set.hpp"

using namespace fibspec;

TEST_CASE("normalization sorts and fuses touching intervals") {
  const auto s = IntervalSet::from_intervals({{3, 4}, {0, 1}, {1, 2}, {3.5, 5}});
  REQUIRE(s.size() == 2);
  CHECK(s.intervals()[0] == Interval{0, 2});
  CHECK(s.intervals()[1] == Interval{3, 5});
  CHECK(s.total_length() == 4.0);
  CHECK(s.hull() == Interval{0, 5});
}

TEST_CASE("invalid intervals are rejected") {
  CHECK_THROWS_AS(IntervalSet::from_intervals({{1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(IntervalSet::single(0, std::numeric_limits<double>::infinity()), std::invalid_argument);
}

TEST_CASE("membership and inclusion") {
  const auto s = IntervalSet::from_intervals({{0, 1}, {2, 3}});
  CHECK(s.contains(0));
  CHECK(s.contains(3));
  CHECK_FALSE(s.contains(1.5));
  CHECK_FALSE(s.contains(-0.1));
  CHECK(IntervalSet::from_intervals({{0.2, 0.3}, {2.5, 3}}).is_subset_of(s));
  CHECK_FALSE(IntervalSet::single(0.5, 2.5).is_subset_of(s));
  CHECK(IntervalSet::point(2).is_subset_of(s));
  CHECK(IntervalSet{}.is_subset_of(s));
}

TEST_CASE("dilation can fuse neighbours") {
  const auto s = IntervalSet::from_intervals({{0, 1}, {1.5, 2}});
  CHECK(s.dilated(0.1).size() == 2);
  CHECK(s.dilated(0.25).size() == 1);
  CHECK(s.translated(1).hull() == Interval{1, 3});
  CHECK(s.scaled(2).hull() == Interval{0, 4});
}

TEST_CASE("unite") {
  const auto a = IntervalSet::from_intervals({{-2, 2}});
  const auto b = IntervalSet::from_intervals({{3, 7}});
  CHECK(IntervalSet::unite(a, b).size() == 2);
  CHECK(IntervalSet::unite(a, IntervalSet::single(1, 5)) == IntervalSet::single(-2, 5));
}
