#include "fibspec/hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "fibspec/errors.hpp"

namespace fibspec {

namespace {

constexpr double kPivotGuard = 1e-300;

}  // namespace

FibonacciPotential::FibonacciPotential(double lambda, double omega0)
    : lambda_(lambda), omega0_(omega0) {
  if (!std::isfinite(lambda) || lambda < 0.0) throw std::invalid_argument("lambda must be >= 0");
  if (!(omega0 >= 0.0 && omega0 < 1.0)) throw std::invalid_argument("omega0 must lie in [0, 1)");
}

int FibonacciPotential::value(long n) const {
  const long double alpha = 0.6180339887498948482045868343656381L;
  long double phase = static_cast<long double>(n) * alpha + omega0_;
  phase -= std::floor(phase);
  return phase >= 1.0L - alpha && phase < 1.0L ? 1 : 0;
}

std::vector<int> FibonacciPotential::values(long n_from, long n_to) const {
  if (n_from > n_to) throw std::invalid_argument("potential range is empty");
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n_to - n_from + 1));
  for (long n = n_from; n <= n_to; ++n) out.push_back(value(n));
  return out;
}

TridiagonalMatrix truncated_hamiltonian(const FibonacciPotential& potential, std::size_t n) {
  if (n == 0) throw std::invalid_argument("truncation size must be >= 1");
  TridiagonalMatrix m;
  m.diagonal.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) {
    m.diagonal.push_back(potential.lambda() * potential.value(static_cast<long>(i)));
  }
  return m;
}

std::size_t eigenvalues_below(const TridiagonalMatrix& m, double shift) {
  std::size_t negatives = 0;
  double d = 1.0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    d = (m.diagonal[i] - shift) - (i == 0 ? 0.0 : 1.0 / d);
    if (d == 0.0) d = -kPivotGuard;
    if (d < 0.0) ++negatives;
  }
  return negatives;
}

std::vector<double> eigenvalues(const TridiagonalMatrix& m, double tol) {
  if (m.size() == 0) throw std::invalid_argument("eigenvalues: empty matrix");
  if (!(tol > 0.0)) throw std::invalid_argument("eigenvalues: tol must be positive");
  const auto [dmin, dmax] = std::minmax_element(m.diagonal.begin(), m.diagonal.end());
  const double radius = m.size() > 1 ? 2.0 : 0.0;
  // Widen slightly so no eigenvalue sits on the bracket edge.
  const double lo = *dmin - radius - 1e-9;
  const double hi = *dmax + radius + 1e-9;
  const std::size_t n = m.size();
  if (eigenvalues_below(m, lo) != 0 || eigenvalues_below(m, hi) != n) {
    throw NumericFailure("Sturm count on the Gershgorin interval does not equal matrix size");
  }

  std::vector<double> out(n);
  for (std::size_t index = 0; index < n; ++index) {
    // Smallest t with count(t) > index.
    double a = lo;
    double b = hi;
    if (index > 0) a = std::max(a, out[index - 1] - tol);
    while (b - a > tol) {
      const double mid = 0.5 * (a + b);
      if (mid <= a || mid >= b) {
        std::ostringstream msg;
        msg << "cannot resolve eigenvalue cluster near " << mid << " to tol " << tol;
        throw NumericFailure(msg.str());
      }
      if (eigenvalues_below(m, mid) > index) {
        b = mid;
      } else {
        a = mid;
      }
    }
    out[index] = 0.5 * (a + b);
  }
  return out;
}

std::vector<double> square_eigenvalue_sample(std::span<const double> e1, std::span<const double> e2) {
  if (e1.empty() || e2.empty()) throw std::invalid_argument("square_eigenvalue_sample: empty input");
  if (e1.size() > kSquareSampleCap / e2.size()) {
    throw SizeCapExceeded("square_eigenvalue_sample: more than 4e6 pairwise sums");
  }
  std::vector<double> out;
  out.reserve(e1.size() * e2.size());
  for (const double a : e1) {
    for (const double b : e2) out.push_back(a + b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace fibspec
