#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "fibspec/errors.hpp"
#include "fibspec/ifs.hpp"

using namespace fibspec;

TEST_CASE("attractor covers") {
  const auto mt = LinearIFS::middle_thirds();
  CHECK(attractor_cover(mt, 1) == IntervalSet::from_intervals({{0, 1.0 / 3}, {2.0 / 3, 1}}));
  CHECK(attractor_cover(mt, 0) == IntervalSet::single(0, 1));
  const auto q2 = attractor_cover(LinearIFS::quarters(), 2);
  REQUIRE(q2.size() == 4);
  for (const auto& iv : q2.intervals()) CHECK(iv.length() == 1.0 / 16);
  CHECK_THROWS_AS(attractor_cover(mt, 20), SizeCapExceeded);
  CHECK_THROWS_AS(attractor_cover(mt, -1), std::invalid_argument);
}

TEST_CASE("property: attractor covers nest exactly") {
  for (const auto& ifs : {LinearIFS::middle_thirds(), LinearIFS::quarters(),
                          LinearIFS({{0.3, 0.0}, {0.2, 0.5}, {0.25, 0.75}}, {0, 1})}) {
    for (int d = 0; d < 9; ++d) REQUIRE(attractor_cover(ifs, d + 1).is_subset_of(attractor_cover(ifs, d)));
  }
}

TEST_CASE("IFS validation") {
  CHECK_THROWS_AS(LinearIFS({{0.5, 0.7}}, {0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(LinearIFS({{1.0, 0.0}}, {0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(LinearIFS({}, {0, 1}), std::invalid_argument);
}

TEST_CASE("similarity dimension") {
  CHECK(similarity_dim(LinearIFS::middle_thirds()) ==
        doctest::Approx(std::log(2.0) / std::log(3.0)).epsilon(1e-10));
  CHECK(similarity_dim(LinearIFS::quarters()) == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(similarity_dim(LinearIFS({{0.5, 0.0}, {0.5, 0.5}}, {0, 1})) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK_THROWS_AS(similarity_dim(LinearIFS({{0.6, 0.0}, {0.6, 0.4}}, {0, 1})), std::invalid_argument);
}

TEST_CASE("property: box dimension of attractors matches similarity dimension") {
  for (const auto& ifs : {LinearIFS::middle_thirds(), LinearIFS::quarters(),
                          LinearIFS({{0.2, 0.0}, {0.2, 0.4}, {0.2, 0.8}}, {0, 1})}) {
    CHECK(std::abs(attractor_box_dim(ifs, 4, 10).value - similarity_dim(ifs)) <= 0.02);
  }
}

TEST_CASE("resonance verdicts") {
  const auto same = log_ratio_resonance(1.0 / 3, 1.0 / 3, 1000);
  CHECK(same.resonant);
  CHECK(same.best.num == 1);
  CHECK(same.best.den == 1);
  const auto two = log_ratio_resonance(0.25, 0.5, 1000);
  CHECK(two.resonant);
  CHECK(two.best.num == 2);
  CHECK(two.best.den == 1);
  const auto irr = log_ratio_resonance(1.0 / 3, 0.5, 1'000'000);
  CHECK_FALSE(irr.resonant);
  CHECK(irr.best.den <= 1'000'000);
  CHECK(irr.error > 0.0);
  CHECK_THROWS_AS(log_ratio_resonance(1.5, 0.5, 10), std::invalid_argument);
  CHECK_THROWS_AS(log_ratio_resonance(0.5, 0.5, 0), std::invalid_argument);
}

TEST_CASE("sum-set demos") {
  const auto q = LinearIFS::quarters(), mt = LinearIFS::middle_thirds();
  const double resonant = sum_box_dim(q, q, 4, 10).value;
  CHECK(std::abs(resonant - std::log(3.0) / std::log(4.0)) <= 0.02);
  CHECK(resonant < 1.0);
  CHECK(std::abs(sum_box_dim(mt, q, 4, 12).value - 1.0) <= 0.02);
}
