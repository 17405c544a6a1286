#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace fibspec {

/// Inverse golden mean (sqrt(5) - 1) / 2.
inline constexpr double kInverseGoldenMean = 0.61803398874989484820;

/// omega_n = 1 if (n * alpha + omega0 mod 1) lies in [1 - alpha, 1), else 0.
class FibonacciPotential {
 public:
  FibonacciPotential(double lambda, double omega0 = 0.0);

  double lambda() const { return lambda_; }
  double omega0() const { return omega0_; }

  int value(long n) const;
  /// omega_n for n = n_from .. n_to inclusive.
  std::vector<int> values(long n_from, long n_to) const;

 private:
  double lambda_;
  double omega0_;
};

/// Symmetric tridiagonal matrix with unit off-diagonal.
struct TridiagonalMatrix {
  std::vector<double> diagonal;

  std::size_t size() const { return diagonal.size(); }
};

/// Dirichlet truncation of H_lambda on sites 1..n: diagonal lambda * omega_k.
TridiagonalMatrix truncated_hamiltonian(const FibonacciPotential& potential, std::size_t n);

/// Number of eigenvalues strictly below `shift` (Sturm count).
std::size_t eigenvalues_below(const TridiagonalMatrix& m, double shift);

/// All eigenvalues in ascending order, each bracketed to width <= tol by
/// Sturm-count bisection on the Gershgorin interval.
/// Throws NumericFailure if a bracket cannot be shrunk to tol.
std::vector<double> eigenvalues(const TridiagonalMatrix& m, double tol = 1e-12);

inline constexpr std::size_t kSquareSampleCap = 4'000'000;

/// Eigenvalues of the separable square operator: all pairwise sums, sorted.
std::vector<double> square_eigenvalue_sample(std::span<const double> e1, std::span<const double> e2);

}  // namespace fibspec
