#pragma once

#include <cstddef>
#include <vector>

namespace fibspec {

/// Point in the phase space of the trace map.
struct Point3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  bool operator==(const Point3&) const = default;
};

bool is_finite(const Point3& p);

/// Coupling constant. Zero is admitted so the free case can be studied;
/// spectral routines call require_positive().
class Coupling {
 public:
  explicit Coupling(double value);

  double value() const { return value_; }
  const Coupling& require_positive() const;

 private:
  double value_;
};

/// Orbits are cut off once a coordinate leaves this box.
inline constexpr double kOverflowGuard = 1e150;

/// f(x,y,z) = (2xy - z, x, y).
Point3 apply_map(const Point3& p);

/// f^{-1}(x,y,z) = (y, z, 2yz - x).
Point3 apply_map_inverse(const Point3& p);

/// Fricke-Vogt invariant x^2 + y^2 + z^2 - 2xyz - 1, preserved by the map.
double invariant(const Point3& p);

/// The line ((E - lambda)/2, E/2, 1); it lies on {invariant = lambda^2 / 4}.
Point3 spectral_line(Coupling lambda, double energy);

struct Orbit {
  std::vector<Point3> points;  // p, f(p), ..., as far as the guard allows
  bool overflowed = false;
};

/// Forward orbit p, f(p), ..., f^n(p). Stops before the first point with a
/// coordinate above kOverflowGuard and sets `overflowed`.
Orbit orbit(const Point3& p, std::size_t n);

}  // namespace fibspec
