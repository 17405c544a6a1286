#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "fibspec/interval_set.hpp"

namespace fibspec {

enum class DimensionMethod { box, moran };

std::string_view to_string(DimensionMethod m);

struct DimensionEstimate {
  double value = 0.0;  // clamped to [0, 2]
  double slope_stderr = 0.0;
  std::vector<int> levels_used;
  DimensionMethod method = DimensionMethod::box;
  bool degenerate = false;   // regression had no spread / Moran had < 2 pieces
  bool approximate = false;  // Moran on a set that is not exactly self-similar
};

/// Number of cells [j*eps, (j+1)*eps), j integer, that meet the closed set s.
std::int64_t box_count(const IntervalSet& s, double eps);

/// One refinement level fed to the box-dimension regression.
struct ScaledCover {
  int level = 0;
  double eps = 0.0;
  IntervalSet set;
};

/// Least-squares slope of log N(eps_k) against log(1/eps_k) over every level
/// given (at least three, eps strictly decreasing). A flat regression (all
/// counts equal) returns value 0 with `degenerate` set.
DimensionEstimate box_dim_regression(std::span<const ScaledCover> covers);

/// Root s in [0, 2] of sum_i w_i^s = 1 for weights in (0, 1), to 1e-10.
/// Fewer than two weights give 0.
double moran_exponent(std::span<const double> weights);

/// Moran estimate from the band lengths of `bands` (each in (0, 1)).
DimensionEstimate moran_dim(const IntervalSet& bands);

}  // namespace fibspec
