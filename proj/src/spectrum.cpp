#include "fibspec/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "fibspec/errors.hpp"

namespace fibspec {

namespace {

constexpr int kGridPointsPerBand = 64;
constexpr int kMaxEscalations = 3;
constexpr double kStrictCountCoupling = 5.0;

double sign_of(double v) { return v < 0.0 ? -1.0 : 1.0; }

void require_tol(double tol) {
  if (!(tol > 0.0) || !std::isfinite(tol)) throw std::invalid_argument("tol must be positive");
}

struct Bracket {
  double lo;
  double hi;
  int count;  // constituent parent bands
};

// Components of a union with the number of bands fused into each.
std::vector<Bracket> parent_brackets(const IntervalSet& a, const IntervalSet& b) {
  std::vector<Interval> all(a.intervals());
  all.insert(all.end(), b.intervals().begin(), b.intervals().end());
  std::sort(all.begin(), all.end(), [](const Interval& l, const Interval& r) { return l.lo < r.lo; });
  std::vector<Bracket> out;
  for (const auto& iv : all) {
    if (!out.empty() && iv.lo <= out.back().hi) {
      out.back().hi = std::max(out.back().hi, iv.hi);
      ++out.back().count;
    } else {
      out.push_back({iv.lo, iv.hi, 1});
    }
  }
  return out;
}

// Root of x_k(E) - level inside [lo, hi]; `lo_positive` is the sign class of lo.
double bisect_edge(double lambda, int k, double level, double lo, double hi, bool lo_positive,
                   double tol) {
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const bool mid_positive = half_trace_clamped(lambda, mid, k) - level > 0.0;
    if (mid_positive == lo_positive) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

void scan_bracket(double lambda, int k, double lo, double hi, std::size_t cells, double tol,
                  std::vector<double>& edges) {
  std::vector<double> grid(cells + 1);
  std::vector<double> values(cells + 1);
  for (std::size_t i = 0; i <= cells; ++i) {
    grid[i] = i == cells ? hi : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(cells);
    values[i] = half_trace_clamped(lambda, grid[i], k);
  }
  for (const double level : {1.0, -1.0}) {
    for (std::size_t i = 0; i < cells; ++i) {
      const bool left = values[i] - level > 0.0;
      const bool right = values[i + 1] - level > 0.0;
      if (left != right) {
        edges.push_back(bisect_edge(lambda, k, level, grid[i], grid[i + 1], left, tol));
      }
    }
  }
}

IntervalSet bands_from_edges(double lambda, int k, std::vector<double> edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  std::vector<Interval> bands;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    const double mid = 0.5 * (edges[i] + edges[i + 1]);
    if (std::abs(half_trace_clamped(lambda, mid, k)) <= 1.0) {
      bands.push_back({edges[i], edges[i + 1]});
    }
  }
  return IntervalSet::from_sorted(bands);
}

IntervalSet locate_level(double lambda, int k, const IntervalSet& prev, const IntervalSet& prev2,
                         double tol) {
  const auto brackets = parent_brackets(prev, prev2);
  const bool strict = lambda >= kStrictCountCoupling;
  const auto expected = fibonacci_degree(k);
  std::size_t multiplier = 1;
  IntervalSet bands;
  for (int attempt = 0; attempt <= kMaxEscalations; ++attempt, multiplier *= 4) {
    std::vector<double> edges;
    for (const auto& b : brackets) {
      const double pad = 1e-3 * (b.hi - b.lo) + 2.0 * tol;
      const auto cells = static_cast<std::size_t>(kGridPointsPerBand) *
                         static_cast<std::size_t>(b.count) * multiplier;
      scan_bracket(lambda, k, b.lo - pad, b.hi + pad, cells, tol, edges);
    }
    bands = bands_from_edges(lambda, k, std::move(edges));
    if (!strict || bands.size() == expected) return bands;
  }
  throw NumericFailure("band isolation failed at level " + std::to_string(k) + ": found " +
                       std::to_string(bands.size()) + " of " + std::to_string(expected) +
                       " bands for lambda=" + std::to_string(lambda));
}

}  // namespace

std::uint64_t fibonacci_degree(int k) {
  if (k < 0) throw std::invalid_argument("fibonacci_degree: negative level");
  if (k > 90) throw std::invalid_argument("fibonacci_degree: level too large");
  std::uint64_t a = 1;
  std::uint64_t b = 1;
  for (int i = 0; i < k; ++i) {
    const auto next = a + b;
    a = b;
    b = next;
  }
  return a;
}

HalfTraceSeq half_traces(Coupling lambda, double energy, int K) {
  if (K < 1) throw std::invalid_argument("half_traces: K must be >= 1");
  if (!std::isfinite(energy)) throw std::invalid_argument("half_traces: non-finite energy");
  HalfTraceSeq seq;
  seq.lambda = lambda.value();
  seq.energy = energy;
  seq.values.reserve(static_cast<std::size_t>(K) + 2);
  seq.values.push_back(1.0);
  seq.values.push_back(energy / 2.0);
  seq.values.push_back((energy - lambda.value()) / 2.0);
  auto check_escape = [&seq](int k) {
    if (!seq.escaped_at && std::abs(seq.at(k)) > 1.0 && std::abs(seq.at(k + 1)) > 1.0) {
      seq.escaped_at = k;
    }
  };
  check_escape(0);
  for (int k = 1; k < K; ++k) {
    const double next = 2.0 * seq.at(k) * seq.at(k - 1) - seq.at(k - 2);
    if (!(std::abs(next) <= kOverflowGuard)) {
      // Only an escaped orbit can grow this large; record the escape if the
      // stored prefix did not already show it.
      if (!seq.escaped_at) seq.escaped_at = k;
      break;
    }
    seq.values.push_back(next);
    check_escape(k);
  }
  return seq;
}

EscapeResult escapes(Coupling lambda, double energy, int K) {
  const auto seq = half_traces(lambda, energy, K);
  EscapeResult r;
  if (seq.escaped_at && *seq.escaped_at + 1 <= K) {
    r.escaped = true;
    r.index = seq.escaped_at;
  }
  return r;
}

double half_trace_clamped(double lambda, double energy, int k) {
  double older = 1.0;       // x_{j-2}
  double prev = energy / 2.0;  // x_{j-1}
  if (k == 0) return prev;
  double cur = (energy - lambda) / 2.0;  // x_j
  int j = 1;
  while (true) {
    if (std::abs(prev) > 1.0 && std::abs(cur) > 1.0) {
      // Escaped: |x| grows monotonically from here and
      // sign x_{m+1} = sign x_m * sign x_{m-1}.
      double s_prev = sign_of(prev);
      double s_cur = sign_of(cur);
      for (; j < k; ++j) {
        const double s_next = s_cur * s_prev;
        s_prev = s_cur;
        s_cur = s_next;
      }
      return 2.0 * s_cur;
    }
    if (j == k) return cur;
    const double next = 2.0 * cur * prev - older;
    older = prev;
    prev = cur;
    cur = next;
    ++j;
  }
}

std::vector<IntervalSet> band_hierarchy(Coupling lambda, int k_max, double tol) {
  lambda.require_positive();
  require_tol(tol);
  if (k_max < 0) throw std::invalid_argument("band_hierarchy: negative level");
  const double l = lambda.value();
  std::vector<IntervalSet> sigmas;
  sigmas.reserve(static_cast<std::size_t>(k_max) + 1);
  sigmas.push_back(IntervalSet::single(-2.0, 2.0));
  if (k_max >= 1) sigmas.push_back(IntervalSet::single(l - 2.0, l + 2.0));
  for (int k = 2; k <= k_max; ++k) {
    sigmas.push_back(locate_level(l, k, sigmas[k - 1], sigmas[k - 2], tol));
  }
  return sigmas;
}

IntervalSet sigma_bands(Coupling lambda, int k, double tol) {
  return band_hierarchy(lambda, k, tol).back();
}

SpectrumCover cover_from_hierarchy(double lambda, const std::vector<IntervalSet>& sigmas, int k) {
  if (k < 0 || static_cast<std::size_t>(k) + 1 >= sigmas.size()) {
    throw std::invalid_argument("cover_from_hierarchy: hierarchy too short");
  }
  SpectrumCover c;
  c.lambda = lambda;
  c.level = k;
  c.sigma_k = sigmas[k];
  c.sigma_k1 = sigmas[k + 1];
  c.cover = IntervalSet::unite(c.sigma_k, c.sigma_k1);
  return c;
}

SpectrumCover spectrum_cover(Coupling lambda, int k, double tol) {
  if (k < 0) throw std::invalid_argument("spectrum_cover: negative level");
  return cover_from_hierarchy(lambda.value(), band_hierarchy(lambda, k + 1, tol), k);
}

}  // namespace fibspec
