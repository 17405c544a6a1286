#pragma once

#include <cstdint>
#include <vector>

#include "fibspec/dimension.hpp"
#include "fibspec/interval_set.hpp"
#include "fibspec/rational.hpp"

namespace fibspec {

/// x -> ratio * x + translation, 0 < ratio < 1.
struct Similarity {
  double ratio = 0.5;
  double translation = 0.0;

  double operator()(double x) const { return ratio * x + translation; }
};

/// Orientation-preserving linear IFS on the line. The constructor checks that
/// every map sends the hull into itself.
class LinearIFS {
 public:
  LinearIFS(std::vector<Similarity> maps, Interval hull);

  const std::vector<Similarity>& maps() const { return maps_; }
  const Interval& hull() const { return hull_; }

  static LinearIFS middle_thirds();
  /// {x/4, x/4 + 3/4}
  static LinearIFS quarters();

 private:
  std::vector<Similarity> maps_;
  Interval hull_;
};

inline constexpr std::uint64_t kAttractorCoverCap = 1'000'000;

/// Union of the images of the hull under all depth-fold compositions.
/// depth + 1 covers nest inside depth covers exactly (rounding is monotone).
IntervalSet attractor_cover(const LinearIFS& ifs, int depth);

/// Unique s with sum r_i^s = 1. First-level images must have disjoint
/// interiors (open set condition), else std::invalid_argument.
double similarity_dim(const LinearIFS& ifs);

/// Box dimension of attractor covers at depths depth_min..depth_max, each
/// counted at eps_d = r_max^d * |hull|.
DimensionEstimate attractor_box_dim(const LinearIFS& ifs, int depth_min, int depth_max);

/// Box dimension of the sum of two attractors. Scales follow `a`
/// (eps_d = r_max^d * |hull|); `b` is refined to the first depth whose pieces
/// are no longer than eps_d.
DimensionEstimate sum_box_dim(const LinearIFS& a, const LinearIFS& b, int depth_min, int depth_max);

struct ResonanceVerdict {
  double log_ratio = 0.0;  // log r1 / log r2
  Rational best;           // nearest rational with denominator <= qmax
  double error = 0.0;      // |log_ratio - best|
  bool resonant = false;   // error <= 1e-12 / best.den
};

/// Continued-fraction test of whether log r1 / log r2 is rational with a
/// denominator up to qmax.
ResonanceVerdict log_ratio_resonance(double r1, double r2, std::int64_t qmax);

}  // namespace fibspec
