#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "fibspec/rational.hpp"
#include "fibspec/tracemap.hpp"

namespace fibspec {

using Vec3 = std::array<double, 3>;
using Mat3 = std::array<Vec3, 3>;

Mat3 multiply(const Mat3& a, const Mat3& b);
double determinant(const Mat3& m);

/// Df at p: rows (2y, 2x, -1), (1, 0, 0), (0, 1, 0). Determinant is -1.
Mat3 jacobian(const Point3& p);

/// Gradient of the invariant, (2x - 2yz, 2y - 2xz, 2z - 2xy).
Vec3 invariant_gradient(const Point3& p);

/// Orthonormal basis of the plane orthogonal to grad I(p), by Gram-Schmidt on
/// the two coordinate axes least aligned with the gradient.
std::array<Vec3, 2> tangent_frame(const Point3& p);

double g_p(double a);
double g_q(double a);

/// (-1/2, g_p(a), -1/2); lies on {invariant = a}, period 4.
Point3 point_p(double a);
/// (0, g_q(a), 0); lies on {invariant = a}, period 6.
Point3 point_q(double a);

inline constexpr double kPeriodTol = 1e-10;
inline constexpr int kDefaultMaxPeriod = 64;

/// Smallest n <= n_max with |f^n(p) - p| < tol. NumericFailure if none.
int minimal_period(const Point3& p, int n_max = kDefaultMaxPeriod, double tol = kPeriodTol);

struct RestrictedMultiplier {
  double multiplier = 0.0;   // largest |eigenvalue| of the 2x2 restriction
  double determinant = 0.0;  // of the 2x2 restriction
  double trace = 0.0;
  std::array<std::array<double, 2>, 2> matrix{};
  std::array<Vec3, 2> frame{};
  Vec3 unstable_direction{};  // unit vector, zero if the eigenvalues are complex
};

/// D(f^n) at a period-n point, compressed to the tangent plane of the
/// invariant surface. std::invalid_argument if p is not n-periodic to 1e-10
/// or grad I(p) vanishes.
RestrictedMultiplier restricted_multiplier(const Point3& p, int n);

/// Closed forms for the unstable multipliers (as magnitudes).
double multiplier_p_closed(double a);
double multiplier_q_closed(double a);

/// log multiplier_p / log multiplier_q.
double log_ratio(double a);

struct PeriodicPointInfo {
  double a = 0.0;
  double lambda = 0.0;  // 2 sqrt(a): the point lies on the surface of this coupling
  Point3 point;
  int period = 0;
  double multiplier_closed = 0.0;
  double multiplier_numeric = 0.0;
  double restricted_determinant = 0.0;
  std::array<Vec3, 2> tangent_frame{};
  Vec3 unstable_direction{};
};

PeriodicPointInfo periodic_info_p(double a);
PeriodicPointInfo periodic_info_q(double a);

inline constexpr double kExceptionalTol = 1e-9;

struct ExceptionalCandidate {
  double a = 0.0;
  double lambda = 0.0;
  double log_ratio = 0.0;
  Rational nearest;
  double error = 0.0;
};

/// Grid points of [a_min, a_max] where log_ratio lies within 1e-9 of a
/// rational with denominator <= qmax.
std::vector<ExceptionalCandidate> scan_exceptional(double a_min, double a_max, int grid,
                                                   std::int64_t qmax);

}  // namespace fibspec
