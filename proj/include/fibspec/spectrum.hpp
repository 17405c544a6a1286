#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fibspec/interval_set.hpp"
#include "fibspec/tracemap.hpp"

namespace fibspec {

/// Degree of the half-trace polynomial x_k(E): F_0 = F_1 = 1, F_{k+1} = F_k + F_{k-1}.
std::uint64_t fibonacci_degree(int k);

/// Half-traces x_{-1} = 1, x_0 = E/2, x_1 = (E - lambda)/2,
/// x_{k+1} = 2 x_k x_{k-1} - x_{k-2}. The triple (x_{k+1}, x_k, x_{k-1}) is
/// f^k applied to the spectral line point.
struct HalfTraceSeq {
  double lambda = 0.0;
  double energy = 0.0;
  std::vector<double> values;     // values[k + 1] == x_k
  std::optional<int> escaped_at;  // smallest k with |x_k| > 1 and |x_{k+1}| > 1

  double at(int k) const { return values.at(static_cast<std::size_t>(k + 1)); }
  /// Largest index stored (may be below the requested K if the guard fired).
  int last_index() const { return static_cast<int>(values.size()) - 2; }
};

/// x_{-1}..x_K. Stops early (with escaped_at set) once a value passes
/// kOverflowGuard.
HalfTraceSeq half_traces(Coupling lambda, double energy, int K);

inline constexpr int kDefaultEscapeHorizon = 40;

struct EscapeResult {
  bool escaped = false;
  std::optional<int> index;
};

/// True iff two consecutive half-traces exceed 1 in modulus within K steps.
/// A negative answer is "not yet escaped", never a membership proof.
EscapeResult escapes(Coupling lambda, double energy, int K = kDefaultEscapeHorizon);

/// x_k(E) computed without overflow: once the orbit escapes only the sign
/// is propagated and the returned value is +-2. |result| <= 1 exactly when
/// E lies in sigma_k.
double half_trace_clamped(double lambda, double energy, int k);

inline constexpr double kDefaultBandTol = 1e-12;

/// sigma_0 .. sigma_{k_max}, where sigma_k = {E : |x_k(E)| <= 1}, band edges
/// located to `tol`.
///
/// Edges of sigma_k are searched inside the components of
/// sigma_{k-1} U sigma_{k-2}, which contain sigma_k. Each component gets a
/// grid of 64 points per constituent band; sign changes of x_k - 1 and
/// x_k + 1 are refined by bisection. For lambda >= 5 the band count must equal
/// fibonacci_degree(k); on a shortfall the grids are refined x4 up to three
/// times, then NumericFailure is thrown. Below 5 touching bands may merge.
std::vector<IntervalSet> band_hierarchy(Coupling lambda, int k_max, double tol = kDefaultBandTol);

IntervalSet sigma_bands(Coupling lambda, int k, double tol = kDefaultBandTol);

struct SpectrumCover {
  double lambda = 0.0;
  int level = 0;
  IntervalSet sigma_k;
  IntervalSet sigma_k1;
  IntervalSet cover;  // sigma_k U sigma_{k+1}, contains the spectrum
};

SpectrumCover spectrum_cover(Coupling lambda, int k, double tol = kDefaultBandTol);

/// Builds the level-k cover from a hierarchy holding at least k + 2 levels.
SpectrumCover cover_from_hierarchy(double lambda, const std::vector<IntervalSet>& sigmas, int k);

}  // namespace fibspec
