#include "fibspec/sumset.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>

#include "fibspec/errors.hpp"

namespace fibspec {

IntervalSet minkowski_sum(const IntervalSet& a, const IntervalSet& b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("minkowski_sum: empty operand");
  const auto pairs = static_cast<std::uint64_t>(a.size()) * static_cast<std::uint64_t>(b.size());
  if (pairs > kMinkowskiPairCap) {
    throw SizeCapExceeded("minkowski_sum: " + std::to_string(pairs) +
                          " pairwise sums exceed the 1e7 cap; coarsen the operands first");
  }
  const auto& outer = a.size() <= b.size() ? a.intervals() : b.intervals();
  const auto& inner = a.size() <= b.size() ? b.intervals() : a.intervals();

  // One cursor per outer interval walks the inner list in order.
  struct Cursor {
    double lo;
    std::size_t row;
    std::size_t col;
  };
  auto later = [](const Cursor& l, const Cursor& r) {
    return l.lo > r.lo || (l.lo == r.lo && l.row > r.row);
  };
  std::priority_queue<Cursor, std::vector<Cursor>, decltype(later)> heap(later);
  for (std::size_t row = 0; row < outer.size(); ++row) {
    heap.push({outer[row].lo + inner[0].lo, row, 0});
  }
  std::vector<Interval> merged;
  while (!heap.empty()) {
    const Cursor c = heap.top();
    heap.pop();
    const double hi = outer[c.row].hi + inner[c.col].hi;
    if (!merged.empty() && c.lo <= merged.back().hi) {
      merged.back().hi = std::max(merged.back().hi, hi);
    } else {
      merged.push_back({c.lo, hi});
    }
    if (c.col + 1 < inner.size()) {
      heap.push({outer[c.row].lo + inner[c.col + 1].lo, c.row, c.col + 1});
    }
  }
  return IntervalSet::from_sorted(merged);
}

double nominal_scale(const SpectrumCover& cover) {
  const auto bands = fibonacci_degree(cover.level) + fibonacci_degree(cover.level + 1);
  return cover.cover.total_length() / static_cast<double>(bands);
}

namespace {

struct LevelData {
  std::vector<SpectrumCover> covers;  // levels first..k
  std::vector<ScaledCover> scaled;
};

LevelData level_data(double lambda, int first, int k, double tol) {
  const auto sigmas = band_hierarchy(Coupling(lambda), k + 1, tol);
  LevelData d;
  for (int j = first; j <= k; ++j) {
    auto c = cover_from_hierarchy(lambda, sigmas, j);
    d.scaled.push_back({j, nominal_scale(c), c.cover});
    d.covers.push_back(std::move(c));
  }
  return d;
}

DimensionEstimate fixed_level_moran(const IntervalSet& cover, std::vector<std::string>& caveats,
                                    const char* which) {
  for (const auto& iv : cover.intervals()) {
    if (!(iv.length() > 0.0 && iv.length() < 1.0)) {
      caveats.push_back(std::string("moran estimate for ") + which +
                        " skipped: a cover component has length outside (0, 1)");
      DimensionEstimate skipped;
      skipped.method = DimensionMethod::moran;
      skipped.degenerate = true;
      skipped.approximate = true;
      return skipped;
    }
  }
  auto est = moran_dim(cover);
  est.approximate = true;
  if (est.value > 1.0) {
    caveats.push_back(std::string("moran estimate for ") + which +
                      " exceeded 1 and was clamped: fixed-level bands are far from self-similar");
    est.value = 1.0;
  }
  return est;
}

}  // namespace

TheoremReport check_theorem_rect(double lambda1, double lambda2, int k, double tol) {
  if (!(lambda1 > 0.0) || !(lambda2 > 0.0)) throw std::invalid_argument("couplings must be positive");
  if (k < 2 || k > kMaxTheoremLevel) {
    throw std::invalid_argument("theorem check level must lie in [2, 16]");
  }
  const int first = std::max(0, k - kSumRegressionSpan);

  TheoremReport r;
  r.lambda1 = lambda1;
  r.lambda2 = lambda2;
  r.level = k;
  for (int j = first; j <= k; ++j) r.levels.push_back(j);

  const auto d1 = level_data(lambda1, first, k, tol);
  const auto d2 = lambda2 == lambda1 ? d1 : level_data(lambda2, first, k, tol);

  r.hd1_est = box_dim_regression(d1.scaled);
  r.hd2_est = box_dim_regression(d2.scaled);
  r.cover1 = d1.covers.back().cover;
  r.cover2 = d2.covers.back().cover;
  r.moran1_est = fixed_level_moran(r.cover1, r.caveats, "lambda1");
  r.moran2_est = fixed_level_moran(r.cover2, r.caveats, "lambda2");

  std::vector<ScaledCover> sums;
  for (std::size_t i = 0; i < d1.scaled.size(); ++i) {
    const double eps = std::max(d1.scaled[i].eps, d2.scaled[i].eps);
    sums.push_back({d1.scaled[i].level, eps, minkowski_sum(d1.scaled[i].set, d2.scaled[i].set)});
    r.scales.push_back(eps);
  }
  r.sum_dim_est = box_dim_regression(sums);
  r.sum_cover = sums.back().set;

  r.rhs = std::min(r.hd1_est.value + r.hd2_est.value, 1.0);
  r.gap = r.sum_dim_est.value - r.rhs;
  r.caveats.push_back(
      "the identity is expected for all but countably many couplings (a dense exceptional set); "
      "finite-level estimates cannot detect exceptional couplings");
  if (r.sum_dim_est.degenerate) r.caveats.push_back("sum-set regression was degenerate");
  return r;
}

TheoremReport check_theorem_square(double lambda, int k, double tol) {
  return check_theorem_rect(lambda, lambda, k, tol);
}

}  // namespace fibspec
