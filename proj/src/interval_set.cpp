#include "fibspec/interval_set.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fibspec {

namespace {

void validate(const Interval& iv) {
  if (!std::isfinite(iv.lo) || !std::isfinite(iv.hi) || iv.lo > iv.hi) {
    throw std::invalid_argument("interval must be finite with lo <= hi");
  }
}

}  // namespace

IntervalSet IntervalSet::from_intervals(std::vector<Interval> intervals) {
  for (const auto& iv : intervals) validate(iv);
  std::sort(intervals.begin(), intervals.end(), [](const Interval& a, const Interval& b) {
    return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
  });
  return from_sorted(intervals);
}

IntervalSet IntervalSet::from_sorted(std::span<const Interval> intervals) {
  IntervalSet out;
  out.intervals_.reserve(intervals.size());
  for (const auto& iv : intervals) {
    validate(iv);
    if (!out.intervals_.empty() && iv.lo <= out.intervals_.back().hi) {
      auto& last = out.intervals_.back();
      last.hi = std::max(last.hi, iv.hi);
    } else {
      if (!out.intervals_.empty() && iv.lo < out.intervals_.back().lo) {
        throw std::invalid_argument("from_sorted: input not sorted");
      }
      out.intervals_.push_back(iv);
    }
  }
  return out;
}

IntervalSet IntervalSet::single(double lo, double hi) {
  return from_intervals({Interval{lo, hi}});
}

double IntervalSet::total_length() const {
  double sum = 0.0;
  for (const auto& iv : intervals_) sum += iv.length();
  return sum;
}

Interval IntervalSet::hull() const {
  if (intervals_.empty()) throw std::logic_error("hull of empty interval set");
  return {intervals_.front().lo, intervals_.back().hi};
}

bool IntervalSet::contains(double x) const {
  auto it = std::upper_bound(intervals_.begin(), intervals_.end(), x,
                             [](double v, const Interval& iv) { return v < iv.lo; });
  if (it == intervals_.begin()) return false;
  --it;
  return x <= it->hi;
}

bool IntervalSet::is_subset_of(const IntervalSet& other) const {
  std::size_t j = 0;
  const auto& outer = other.intervals_;
  for (const auto& iv : intervals_) {
    while (j < outer.size() && outer[j].hi < iv.lo) ++j;
    if (j == outer.size() || outer[j].lo > iv.lo || outer[j].hi < iv.hi) return false;
  }
  return true;
}

IntervalSet IntervalSet::dilated(double radius) const {
  if (!(radius >= 0.0)) throw std::invalid_argument("dilation radius must be >= 0");
  std::vector<Interval> grown;
  grown.reserve(intervals_.size());
  for (const auto& iv : intervals_) grown.push_back({iv.lo - radius, iv.hi + radius});
  return from_sorted(grown);
}

IntervalSet IntervalSet::translated(double shift) const {
  std::vector<Interval> moved;
  moved.reserve(intervals_.size());
  for (const auto& iv : intervals_) moved.push_back({iv.lo + shift, iv.hi + shift});
  return from_sorted(moved);
}

IntervalSet IntervalSet::scaled(double factor) const {
  if (!(factor > 0.0)) throw std::invalid_argument("scale factor must be positive");
  std::vector<Interval> out;
  out.reserve(intervals_.size());
  for (const auto& iv : intervals_) out.push_back({iv.lo * factor, iv.hi * factor});
  return from_sorted(out);
}

IntervalSet IntervalSet::unite(const IntervalSet& a, const IntervalSet& b) {
  std::vector<Interval> merged;
  merged.reserve(a.size() + b.size());
  std::merge(a.intervals_.begin(), a.intervals_.end(), b.intervals_.begin(), b.intervals_.end(),
             std::back_inserter(merged),
             [](const Interval& l, const Interval& r) { return l.lo < r.lo; });
  return from_sorted(merged);
}

}  // namespace fibspec
