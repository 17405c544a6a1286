#pragma once

#include <cstdint>

namespace fibspec {

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

/// Fraction p/q with 1 <= q <= max_den nearest to x. The double is expanded
/// exactly (it is a dyadic rational), using convergents and the final
/// semiconvergent. Requires |x| < 2^30 and
/// max_den <= 2^31.
Rational best_rational(double x, std::int64_t max_den);

}  // namespace fibspec
