#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace fibspec {

/// Closed interval [lo, hi]; lo == hi is a point.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  double length() const { return hi - lo; }
  bool operator==(const Interval&) const = default;
};

/// Finite union of disjoint closed intervals kept sorted and merge-normalized:
/// intervals()[i].hi < intervals()[i + 1].lo always holds, touching or
/// overlapping inputs are fused.
class IntervalSet {
 public:
  IntervalSet() = default;

  /// Normalizes arbitrary (possibly overlapping, unsorted) input.
  /// Throws std::invalid_argument on non-finite or inverted intervals.
  static IntervalSet from_intervals(std::vector<Interval> intervals);

  /// Caller guarantees the intervals are already sorted by lo; overlapping
  /// neighbours are still fused. Used by streaming producers.
  static IntervalSet from_sorted(std::span<const Interval> intervals);

  static IntervalSet single(double lo, double hi);
  static IntervalSet point(double x) { return single(x, x); }

  const std::vector<Interval>& intervals() const { return intervals_; }
  std::size_t size() const { return intervals_.size(); }
  bool empty() const { return intervals_.empty(); }

  double total_length() const;
  Interval hull() const;
  bool contains(double x) const;

  /// Every interval of *this lies inside some interval of `other`.
  bool is_subset_of(const IntervalSet& other) const;

  IntervalSet dilated(double radius) const;
  IntervalSet translated(double shift) const;
  IntervalSet scaled(double factor) const;

  static IntervalSet unite(const IntervalSet& a, const IntervalSet& b);

  bool operator==(const IntervalSet&) const = default;

 private:
  std::vector<Interval> intervals_;
};

}  // namespace fibspec
