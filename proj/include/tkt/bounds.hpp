// Numeric bounds: Seifert data, the braid-index and crossing-number
// inequalities, meridional-norm intervals, and satellite wrapping/winding
// arithmetic.  Everything here is exact integer arithmetic.

#ifndef TKT_BOUNDS_HPP
#define TKT_BOUNDS_HPP

#include <optional>
#include <utility>

#include "tkt/diagram.hpp"
#include "tkt/laurent.hpp"

namespace tkt {

struct SeifertData {
  int circles;  // Seifert circle count s(D)
  int chi;      // s - c, Euler characteristic of the Seifert surface
  std::optional<int> canonical_genus;  // (c - s + 1)/2, knots only
};
SeifertData seifert_data(const LinkDiagram& d);

// Morton-Franks-Williams: b >= (E - e)/2 + 1.
int mfw_lb(const LaurentPoly2& p);

// Ohyama: c >= 2b - 2, from a braid-index lower bound b >= 1.
long long ohyama_lb(long long braid_lb);

// Diao: c >= 2g - 1 + b, clamped at zero.
long long diao_lb(long long genus_lb, long long braid_lb);

struct NormBounds {
  int lower;
  int upper;
  bool exact;  // implies lower == upper
  bool operator==(const NormBounds&) const = default;
};

// Meridional norm x of a region with the given wrapping/winding numbers:
// exact eta - 1 when omega = eta or eta = omega + 2, otherwise the interval
// [omega + 1, eta - 1]; admissible values satisfy x + 1 = eta (mod 2).
NormBounds meridional_norm_bounds(int eta, int omega);

struct GenusSlopeReport {
  long long two_g_slope_lower;  // omega * x bounds for the slope of 2 g(K_n)
  long long two_g_slope_upper;
  bool exact;
  long long g_slope_lower;  // stable genus bounds, omega * x / 2
  long long g_slope_upper;
  std::optional<long long> intercept_hint;  // caller-provided constant term
};
// Predicted affine growth 2 g(K_n) = G + n * omega * x, reported for
// sufficiently large n; exact when the norm is exact or omega = 0.
GenusSlopeReport genus_slope_report(int omega, const NormBounds& x,
                                    std::optional<long long> g_hint = {});

struct SatelliteData {
  int eta_k, omega_k;  // companion about the twisting circle
  int eta_p, omega_p;  // pattern inside the companion torus
};

// (eta_K, omega_K) = (eta_k * eta_p, omega_k * omega_p).
std::pair<long long, long long> satellite_wrap_wind(const SatelliteData& d);

struct SatelliteVerdict {
  bool applicable;            // omega_k >= 1; nothing holds without it
  bool hyp_winding_ratio;     // omega_p >= eta_k / omega_k, exactly
  bool hyp_pattern_wraps;     // eta_p >= 2
  bool hypotheses_hold;
  long long eta_K, omega_K;
  long long x_K_min;          // least admissible meridional norm of K about c
  bool slope_inequality;      // omega_K * x_K_min > eta_k (eta_k - 1)
  bool strengthened;          // omega_k = eta_k and omega_p >= 2
};
// Arithmetic verdict for the twisted-satellite comparison; asserts eventual
// inequalities only, never a specific onset.
SatelliteVerdict satellite_slope_check(const SatelliteData& d);

}  // namespace tkt

#endif
