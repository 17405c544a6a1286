#include "fibspec/tracemap.hpp"

#include <cmath>
#include <stdexcept>

namespace fibspec {

namespace {

void require_finite(const Point3& p, const char* where) {
  if (!is_finite(p)) {
    throw std::invalid_argument(std::string(where) + ": non-finite point");
  }
}

bool exceeds_guard(const Point3& p) {
  return !(std::abs(p.x) <= kOverflowGuard && std::abs(p.y) <= kOverflowGuard &&
           std::abs(p.z) <= kOverflowGuard);
}

}  // namespace

bool is_finite(const Point3& p) {
  return std::isfinite(p.x) && std::isfinite(p.y) && std::isfinite(p.z);
}

Coupling::Coupling(double value) : value_(value) {
  if (!std::isfinite(value) || value < 0.0) {
    throw std::invalid_argument("coupling must be finite and non-negative");
  }
}

const Coupling& Coupling::require_positive() const {
  if (!(value_ > 0.0)) {
    throw std::invalid_argument("coupling must be positive");
  }
  return *this;
}

Point3 apply_map(const Point3& p) {
  require_finite(p, "apply_map");
  return {2.0 * p.x * p.y - p.z, p.x, p.y};
}

Point3 apply_map_inverse(const Point3& p) {
  require_finite(p, "apply_map_inverse");
  return {p.y, p.z, 2.0 * p.y * p.z - p.x};
}

double invariant(const Point3& p) {
  require_finite(p, "invariant");
  return p.x * p.x + p.y * p.y + p.z * p.z - 2.0 * p.x * p.y * p.z - 1.0;
}

Point3 spectral_line(Coupling lambda, double energy) {
  if (!std::isfinite(energy)) {
    throw std::invalid_argument("spectral_line: non-finite energy");
  }
  return {(energy - lambda.value()) / 2.0, energy / 2.0, 1.0};
}

Orbit orbit(const Point3& p, std::size_t n) {
  require_finite(p, "orbit");
  Orbit out;
  out.points.reserve(n + 1);
  out.points.push_back(p);
  Point3 current = p;
  for (std::size_t i = 0; i < n; ++i) {
    Point3 next{2.0 * current.x * current.y - current.z, current.x, current.y};
    if (exceeds_guard(next)) {
      out.overflowed = true;
      break;
    }
    out.points.push_back(next);
    current = next;
  }
  return out;
}

}  // namespace fibspec
