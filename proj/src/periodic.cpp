#include "fibspec/periodic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "fibspec/errors.hpp"

namespace fibspec {

namespace {

void require_parameter(double a) {
  if (!std::isfinite(a) || a < 0.0) throw std::invalid_argument("surface parameter a must be >= 0");
}

double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

Vec3 mat_vec(const Mat3& m, const Vec3& v) {
  return {dot(m[0], v), dot(m[1], v), dot(m[2], v)};
}

double distance(const Point3& a, const Point3& b) {
  return std::hypot(a.x - b.x, a.y - b.y, a.z - b.z);
}

Point3 iterate(Point3 p, int n) {
  for (int i = 0; i < n; ++i) p = apply_map(p);
  return p;
}

}  // namespace

Mat3 multiply(const Mat3& a, const Mat3& b) {
  Mat3 out{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      for (int k = 0; k < 3; ++k) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

double determinant(const Mat3& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Mat3 jacobian(const Point3& p) {
  if (!is_finite(p)) throw std::invalid_argument("jacobian: non-finite point");
  return {{{2.0 * p.y, 2.0 * p.x, -1.0}, {1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}}};
}

Vec3 invariant_gradient(const Point3& p) {
  return {2.0 * p.x - 2.0 * p.y * p.z, 2.0 * p.y - 2.0 * p.x * p.z, 2.0 * p.z - 2.0 * p.x * p.y};
}

std::array<Vec3, 2> tangent_frame(const Point3& p) {
  Vec3 g = invariant_gradient(p);
  const double gn = norm(g);
  if (!(gn > 1e-12)) throw std::invalid_argument("tangent_frame: singular point of the surface");
  for (auto& c : g) c /= gn;
  std::array<int, 3> axes{0, 1, 2};
  std::stable_sort(axes.begin(), axes.end(),
                   [&](int l, int r) { return std::abs(g[l]) < std::abs(g[r]); });
  std::array<Vec3, 2> frame{};
  for (int slot = 0; slot < 2; ++slot) {
    Vec3 v{};
    v[axes[slot]] = 1.0;
    const double along = dot(v, g);
    for (int i = 0; i < 3; ++i) v[i] -= along * g[i];
    if (slot == 1) {
      const double proj = dot(v, frame[0]);
      for (int i = 0; i < 3; ++i) v[i] -= proj * frame[0][i];
    }
    const double vn = norm(v);
    for (auto& c : v) c /= vn;
    frame[slot] = v;
  }
  return frame;
}

double g_p(double a) {
  require_parameter(a);
  return (1.0 + std::sqrt(9.0 + 16.0 * a)) / 4.0;
}

double g_q(double a) {
  require_parameter(a);
  return std::sqrt(a + 1.0);
}

Point3 point_p(double a) { return {-0.5, g_p(a), -0.5}; }

Point3 point_q(double a) { return {0.0, g_q(a), 0.0}; }

int minimal_period(const Point3& p, int n_max, double tol) {
  if (n_max < 1) throw std::invalid_argument("minimal_period: n_max must be >= 1");
  Point3 current = p;
  for (int n = 1; n <= n_max; ++n) {
    current = apply_map(current);
    if (distance(current, p) < tol) return n;
  }
  throw NumericFailure("point is not periodic within " + std::to_string(n_max) + " iterations");
}

RestrictedMultiplier restricted_multiplier(const Point3& p, int n) {
  if (n < 1) throw std::invalid_argument("restricted_multiplier: period must be >= 1");
  if (!(distance(iterate(p, n), p) <= kPeriodTol)) {
    throw std::invalid_argument("restricted_multiplier: point is not n-periodic");
  }
  RestrictedMultiplier r;
  r.frame = tangent_frame(p);

  Mat3 product{{{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}}};
  Point3 q = p;
  for (int i = 0; i < n; ++i) {
    product = multiply(jacobian(q), product);
    q = apply_map(q);
  }
  for (int i = 0; i < 2; ++i) {
    const Vec3 image = mat_vec(product, r.frame[i]);
    for (int j = 0; j < 2; ++j) r.matrix[j][i] = dot(r.frame[j], image);
  }
  const auto& m = r.matrix;
  r.trace = m[0][0] + m[1][1];
  r.determinant = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  const double disc = r.trace * r.trace - 4.0 * r.determinant;
  if (disc < 0.0) {
    r.multiplier = std::sqrt(std::abs(r.determinant));
    return r;
  }
  // Larger root computed without cancellation.
  const double root = std::sqrt(disc);
  const double big = r.trace >= 0.0 ? 0.5 * (r.trace + root) : 0.5 * (r.trace - root);
  r.multiplier = std::abs(big);
  // Eigenvector of the 2x2 matrix for `big`, mapped back to 3-space.
  std::array<double, 2> w{m[0][1], big - m[0][0]};
  if (std::hypot(w[0], w[1]) < 1e-14 * (1.0 + std::abs(big))) w = {big - m[1][1], m[1][0]};
  const double wn = std::hypot(w[0], w[1]);
  if (wn > 0.0) {
    for (int i = 0; i < 3; ++i) {
      r.unstable_direction[i] = (w[0] * r.frame[0][i] + w[1] * r.frame[1][i]) / wn;
    }
  }
  return r;
}

double multiplier_p_closed(double a) {
  const double g = g_p(a);
  const double t = 8.0 * g * (1.0 - 2.0 * g) + 1.0;
  return -(t - std::sqrt(t * t - 4.0)) / 2.0;
}

double multiplier_q_closed(double a) {
  const double g = g_q(a);
  const double t = 8.0 * std::pow(g, 4) + 1.0;
  return t + std::sqrt(t * t - 1.0);
}

double log_ratio(double a) { return std::log(multiplier_p_closed(a)) / std::log(multiplier_q_closed(a)); }

namespace {

PeriodicPointInfo build_info(double a, const Point3& point, double closed) {
  PeriodicPointInfo info;
  info.a = a;
  info.lambda = 2.0 * std::sqrt(a);
  info.point = point;
  info.period = minimal_period(point);
  const auto numeric = restricted_multiplier(point, info.period);
  info.multiplier_closed = closed;
  info.multiplier_numeric = numeric.multiplier;
  info.restricted_determinant = numeric.determinant;
  info.tangent_frame = numeric.frame;
  info.unstable_direction = numeric.unstable_direction;
  return info;
}

}  // namespace

PeriodicPointInfo periodic_info_p(double a) { return build_info(a, point_p(a), multiplier_p_closed(a)); }

PeriodicPointInfo periodic_info_q(double a) { return build_info(a, point_q(a), multiplier_q_closed(a)); }

std::vector<ExceptionalCandidate> scan_exceptional(double a_min, double a_max, int grid,
                                                   std::int64_t qmax) {
  require_parameter(a_min);
  if (!(a_min < a_max) || !std::isfinite(a_max)) throw std::invalid_argument("scan needs a_min < a_max");
  if (grid < 2) throw std::invalid_argument("scan grid needs at least 2 points");
  std::vector<ExceptionalCandidate> out;
  for (int i = 0; i < grid; ++i) {
    const double a = i == grid - 1 ? a_max : a_min + (a_max - a_min) * i / (grid - 1);
    const double ratio = log_ratio(a);
    const auto best = best_rational(ratio, qmax);
    const double err = std::abs(ratio - best.value());
    if (err <= kExceptionalTol) out.push_back({a, 2.0 * std::sqrt(a), ratio, best, err});
  }
  return out;
}

}  // namespace fibspec
