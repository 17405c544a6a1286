#include "fibspec/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace fibspec {

namespace {

__extension__ typedef __int128 i128;

i128 abs128(i128 v) { return v < 0 ? -v : v; }

}  // namespace

Rational best_rational(double x, std::int64_t max_den) {
  if (max_den < 1) throw std::invalid_argument("best_rational: max_den must be >= 1");
  if (max_den > (std::int64_t{1} << 31)) throw std::invalid_argument("best_rational: max_den above 2^31");
  if (!std::isfinite(x) || std::abs(x) >= 0x1p30) {
    throw std::invalid_argument("best_rational: value out of range");
  }
  // x = mant * 2^exp with integer mant.
  int exp = 0;
  const double frac = std::frexp(x, &exp);
  auto mant = static_cast<i128>(std::ldexp(frac, 53));
  exp -= 53;
  i128 num = mant;
  i128 den = 1;
  if (exp >= 0) {
    num <<= exp;
  } else if (exp >= -64) {
    den <<= -exp;
  } else {
    // Bits below 2^-64 cannot move the answer for denominators <= 2^31.
    num = mant / (i128{1} << (-64 - exp));
    den = i128{1} << 64;
  }

  // Convergents h/k of num/den.
  i128 h_prev = 0, h = 1;
  i128 k_prev = 1, k = 0;
  i128 n = num, d = den;
  // floor division keeps remainders non-negative for negative x
  auto floordiv = [](i128 a, i128 b) {
    i128 q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
  };
  while (true) {
    const i128 a = floordiv(n, d);
    const i128 k_next = k_prev + a * k;
    if (k_next > max_den) break;
    const i128 h_next = h_prev + a * h;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
    const i128 r = n - a * d;
    n = d;
    d = r;
    if (d == 0) return {static_cast<std::int64_t>(h), static_cast<std::int64_t>(k)};
  }
  // Best semiconvergent below the bound versus the last convergent.
  const i128 m = (max_den - k_prev) / k;
  const i128 hs = h_prev + m * h;
  const i128 ks = k_prev + m * k;
  // Compare |num/den - hs/ks| with |num/den - h/k| exactly.
  const i128 err_s = abs128(num * ks - hs * den) * k;
  const i128 err_c = abs128(num * k - h * den) * ks;
  if (m > 0 && err_s < err_c) {
    return {static_cast<std::int64_t>(hs), static_cast<std::int64_t>(ks)};
  }
  return {static_cast<std::int64_t>(h), static_cast<std::int64_t>(k)};
}

}  // namespace fibspec
