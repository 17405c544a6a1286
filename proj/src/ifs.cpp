#include "fibspec/ifs.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fibspec/dimension.hpp"
#include "fibspec/errors.hpp"
#include "fibspec/sumset.hpp"

namespace fibspec {

namespace {

constexpr double kResonanceTol = 1e-12;

Interval image(const Similarity& m, const Interval& iv) { return {m(iv.lo), m(iv.hi)}; }

}  // namespace

LinearIFS::LinearIFS(std::vector<Similarity> maps, Interval hull)
    : maps_(std::move(maps)), hull_(hull) {
  if (maps_.empty()) throw std::invalid_argument("IFS needs at least one map");
  if (!(hull_.lo < hull_.hi) || !std::isfinite(hull_.lo) || !std::isfinite(hull_.hi)) {
    throw std::invalid_argument("IFS hull must be a non-degenerate finite interval");
  }
  for (const auto& m : maps_) {
    if (!(m.ratio > 0.0 && m.ratio < 1.0) || !std::isfinite(m.translation)) {
      throw std::invalid_argument("IFS ratios must lie in (0, 1)");
    }
    const auto img = image(m, hull_);
    if (img.lo < hull_.lo || img.hi > hull_.hi) {
      throw std::invalid_argument("IFS map does not send the hull into itself");
    }
  }
}

LinearIFS LinearIFS::middle_thirds() {
  return LinearIFS({{1.0 / 3.0, 0.0}, {1.0 / 3.0, 2.0 / 3.0}}, {0.0, 1.0});
}

LinearIFS LinearIFS::quarters() {
  return LinearIFS({{0.25, 0.0}, {0.25, 0.75}}, {0.0, 1.0});
}

IntervalSet attractor_cover(const LinearIFS& ifs, int depth) {
  if (depth < 0) throw std::invalid_argument("attractor_cover: negative depth");
  const auto branches = static_cast<double>(ifs.maps().size());
  if (std::pow(branches, depth) > static_cast<double>(kAttractorCoverCap)) {
    throw SizeCapExceeded("attractor_cover: more than 1e6 compositions");
  }
  IntervalSet current = IntervalSet::single(ifs.hull().lo, ifs.hull().hi);
  for (int level = 0; level < depth; ++level) {
    std::vector<Interval> next;
    next.reserve(current.size() * ifs.maps().size());
    for (const auto& m : ifs.maps()) {
      for (const auto& iv : current.intervals()) next.push_back(image(m, iv));
    }
    current = IntervalSet::from_intervals(std::move(next));
  }
  return current;
}

double similarity_dim(const LinearIFS& ifs) {
  std::vector<Interval> first;
  for (const auto& m : ifs.maps()) first.push_back(image(m, ifs.hull()));
  std::sort(first.begin(), first.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  for (std::size_t i = 1; i < first.size(); ++i) {
    if (first[i].lo < first[i - 1].hi) {
      throw std::invalid_argument("similarity_dim: first-level images overlap");
    }
  }
  std::vector<double> ratios;
  for (const auto& m : ifs.maps()) ratios.push_back(m.ratio);
  if (ratios.size() == 1) return 0.0;
  return moran_exponent(ratios);
}

namespace {

double max_ratio(const LinearIFS& ifs) {
  double r = 0.0;
  for (const auto& m : ifs.maps()) r = std::max(r, m.ratio);
  return r;
}

double piece_scale(const LinearIFS& ifs, int depth) {
  return std::pow(max_ratio(ifs), depth) * (ifs.hull().hi - ifs.hull().lo);
}

void require_depths(int depth_min, int depth_max) {
  if (depth_min < 0 || depth_max - depth_min < 2) {
    throw std::invalid_argument("need at least three depths");
  }
}

}  // namespace

DimensionEstimate attractor_box_dim(const LinearIFS& ifs, int depth_min, int depth_max) {
  require_depths(depth_min, depth_max);
  std::vector<ScaledCover> covers;
  for (int d = depth_min; d <= depth_max; ++d) {
    covers.push_back({d, piece_scale(ifs, d), attractor_cover(ifs, d)});
  }
  return box_dim_regression(covers);
}

DimensionEstimate sum_box_dim(const LinearIFS& a, const LinearIFS& b, int depth_min, int depth_max) {
  require_depths(depth_min, depth_max);
  std::vector<ScaledCover> covers;
  for (int d = depth_min; d <= depth_max; ++d) {
    const double eps = piece_scale(a, d);
    int db = 0;
    while (piece_scale(b, db) > eps) ++db;
    covers.push_back({d, eps, minkowski_sum(attractor_cover(a, d), attractor_cover(b, db))});
  }
  return box_dim_regression(covers);
}

ResonanceVerdict log_ratio_resonance(double r1, double r2, std::int64_t qmax) {
  if (!(r1 > 0.0 && r1 < 1.0) || !(r2 > 0.0 && r2 < 1.0)) {
    throw std::invalid_argument("contraction ratios must lie in (0, 1)");
  }
  if (qmax < 1) throw std::invalid_argument("qmax must be >= 1");
  ResonanceVerdict v;
  v.log_ratio = std::log(r1) / std::log(r2);
  v.best = best_rational(v.log_ratio, qmax);
  v.error = std::abs(v.log_ratio - v.best.value());
  v.resonant = v.error <= kResonanceTol / static_cast<double>(v.best.den);
  return v;
}

}  // namespace fibspec
