#include "fibspec/dimension.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fibspec {

std::string_view to_string(DimensionMethod m) {
  return m == DimensionMethod::box ? "box" : "moran";
}

std::int64_t box_count(const IntervalSet& s, double eps) {
  if (!(eps > 0.0) || !std::isfinite(eps)) throw std::invalid_argument("box_count: eps must be > 0");
  if (s.empty()) throw std::invalid_argument("box_count: empty set");
  std::int64_t count = 0;
  bool have_last = false;
  std::int64_t last = 0;  // highest cell already counted
  for (const auto& iv : s.intervals()) {
    auto first = static_cast<std::int64_t>(std::floor(iv.lo / eps));
    const auto end = static_cast<std::int64_t>(std::floor(iv.hi / eps));
    if (have_last && first <= last) first = last + 1;
    if (first <= end) {
      count += end - first + 1;
      last = end;
      have_last = true;
    }
  }
  return count;
}

DimensionEstimate box_dim_regression(std::span<const ScaledCover> covers) {
  if (covers.size() < 3) throw std::invalid_argument("box_dim_regression: need at least 3 levels");
  for (std::size_t i = 1; i < covers.size(); ++i) {
    if (!(covers[i].eps < covers[i - 1].eps)) {
      throw std::invalid_argument("box_dim_regression: eps must be strictly decreasing");
    }
  }
  const auto n = static_cast<double>(covers.size());
  std::vector<double> xs;
  std::vector<double> ys;
  DimensionEstimate est;
  est.method = DimensionMethod::box;
  for (const auto& c : covers) {
    xs.push_back(std::log(1.0 / c.eps));
    ys.push_back(std::log(static_cast<double>(box_count(c.set, c.eps))));
    est.levels_used.push_back(c.level);
  }
  if (std::all_of(ys.begin(), ys.end(), [&](double y) { return y == ys.front(); })) {
    est.degenerate = true;
    return est;
  }
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  const double slope = sxy / sxx;
  const double intercept = my - slope * mx;
  double ssr = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double r = ys[i] - (intercept + slope * xs[i]);
    ssr += r * r;
  }
  est.value = std::clamp(slope, 0.0, 2.0);
  est.slope_stderr = std::sqrt(ssr / (n - 2.0) / sxx);
  return est;
}

double moran_exponent(std::span<const double> weights) {
  for (const double w : weights) {
    if (!(w > 0.0 && w < 1.0)) throw std::invalid_argument("moran: weights must lie in (0, 1)");
  }
  if (weights.size() < 2) return 0.0;
  auto pressure = [&](double s) {
    double sum = 0.0;
    for (const double w : weights) sum += std::pow(w, s);
    return sum;
  };
  // pressure is strictly decreasing in s, pressure(0) = count > 1.
  double lo = 0.0;
  double hi = 2.0;
  if (pressure(hi) >= 1.0) return hi;
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    if (pressure(mid) > 1.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

DimensionEstimate moran_dim(const IntervalSet& bands) {
  if (bands.empty()) throw std::invalid_argument("moran_dim: empty band set");
  std::vector<double> lengths;
  lengths.reserve(bands.size());
  for (const auto& iv : bands.intervals()) lengths.push_back(iv.length());
  DimensionEstimate est;
  est.method = DimensionMethod::moran;
  est.value = moran_exponent(lengths);
  est.degenerate = lengths.size() < 2;
  return est;
}

}  // namespace fibspec
