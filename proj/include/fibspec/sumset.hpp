#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fibspec/dimension.hpp"
#include "fibspec/interval_set.hpp"
#include "fibspec/spectrum.hpp"

namespace fibspec {

inline constexpr std::uint64_t kMinkowskiPairCap = 10'000'000;

/// {a + b : a in A, b in B} as a normalized interval set. Pairs are streamed
/// in order through a heap, so memory stays proportional to the output.
/// Throws SizeCapExceeded when |A| * |B| > kMinkowskiPairCap; coarsen first.
IntervalSet minkowski_sum(const IntervalSet& a, const IntervalSet& b);

inline constexpr int kMaxTheoremLevel = 16;
inline constexpr int kSumRegressionSpan = 3;  // levels k-3 .. k

struct TheoremReport {
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  int level = 0;
  std::vector<int> levels;
  DimensionEstimate hd1_est;
  DimensionEstimate hd2_est;
  DimensionEstimate moran1_est;  // fixed-level Moran, approximate
  DimensionEstimate moran2_est;
  DimensionEstimate sum_dim_est;
  double rhs = 0.0;  // min(hd1 + hd2, 1)
  double gap = 0.0;  // sum_dim_est - rhs
  std::vector<double> scales;  // eps used for the sum regression, per level
  IntervalSet cover1;          // level-k covers and their sum
  IntervalSet cover2;
  IntervalSet sum_cover;
  std::vector<std::string> caveats;
};

/// Nominal box scale for the level-k cover: total length / (F_k + F_{k+1}).
double nominal_scale(const SpectrumCover& cover);

/// Numerical desk check of dim(Sigma_l1 + Sigma_l2) = min(dim + dim, 1).
/// Reports the gap; never decides pass or fail.
TheoremReport check_theorem_rect(double lambda1, double lambda2, int k,
                                 double tol = kDefaultBandTol);

/// The square operator: lambda1 == lambda2, same pipeline.
TheoremReport check_theorem_square(double lambda, int k, double tol = kDefaultBandTol);

}  // namespace fibspec
