#include "tkt/bounds.hpp"

#include <algorithm>
#include <stdexcept>

#include "tkt/errors.hpp"

namespace tkt {

SeifertData seifert_data(const LinkDiagram& d) {
  SeifertData out;
  out.circles = d.seifert_circle_count();
  out.chi = out.circles - d.crossing_count();
  if (d.component_count() == 1) {
    int twice = d.crossing_count() - out.circles + 1;
    if (twice < 0 || twice % 2 != 0)
      throw std::logic_error("canonical genus is not a non-negative integer");
    out.canonical_genus = twice / 2;
  }
  return out;
}

int mfw_lb(const LaurentPoly2& p) {
  auto [E, e] = ell_degrees(p);  // throws on the zero polynomial
  int spread = E - e;
  return (spread + 1) / 2 + 1;
}

long long ohyama_lb(long long braid_lb) {
  if (braid_lb < 1)
    throw ValidationError("ohyama_lb needs a braid-index bound >= 1");
  return 2 * braid_lb - 2;
}

long long diao_lb(long long genus_lb, long long braid_lb) {
  if (genus_lb < 0 || braid_lb < 1)
    throw ValidationError("diao_lb needs genus >= 0 and braid index >= 1");
  return std::max(0ll, 2 * genus_lb - 1 + braid_lb);
}

NormBounds meridional_norm_bounds(int eta, int omega) {
  if (eta < 2) throw ValidationError("meridional norm needs eta >= 2");
  if (omega < 0 || omega > eta)
    throw ValidationError("winding number must satisfy 0 <= omega <= eta");
  if ((eta - omega) % 2 != 0)
    throw ValidationError("omega and eta must have the same parity");
  if (omega == eta || eta == omega + 2) return {eta - 1, eta - 1, true};
  return {omega + 1, eta - 1, false};
}

GenusSlopeReport genus_slope_report(int omega, const NormBounds& x,
                                    std::optional<long long> g_hint) {
  if (omega < 0) throw ValidationError("omega must be non-negative");
  GenusSlopeReport r;
  r.two_g_slope_lower = static_cast<long long>(omega) * x.lower;
  r.two_g_slope_upper = static_cast<long long>(omega) * x.upper;
  r.exact = x.exact || omega == 0;
  // omega * x is even: omega = eta and x = eta - 1 share no parity obstruction
  r.g_slope_lower = r.two_g_slope_lower / 2;
  r.g_slope_upper = r.two_g_slope_upper / 2;
  r.intercept_hint = g_hint;
  return r;
}

namespace {
void validate_pair(int eta, int omega, const char* which) {
  if (eta < 0 || omega < 0 || omega > eta || (eta - omega) % 2 != 0)
    throw ValidationError(std::string("invalid wrapping/winding pair for ") +
                          which);
}
}  // namespace

std::pair<long long, long long> satellite_wrap_wind(const SatelliteData& d) {
  validate_pair(d.eta_k, d.omega_k, "companion");
  validate_pair(d.eta_p, d.omega_p, "pattern");
  return {static_cast<long long>(d.eta_k) * d.eta_p,
          static_cast<long long>(d.omega_k) * d.omega_p};
}

SatelliteVerdict satellite_slope_check(const SatelliteData& d) {
  auto [eta_K, omega_K] = satellite_wrap_wind(d);
  SatelliteVerdict v{};
  v.eta_K = eta_K;
  v.omega_K = omega_K;
  v.applicable = d.omega_k >= 1;
  // omega_p >= eta_k / omega_k in exact arithmetic
  v.hyp_winding_ratio =
      d.omega_k >= 1 &&
      static_cast<long long>(d.omega_p) * d.omega_k >= d.eta_k;
  v.hyp_pattern_wraps = d.eta_p >= 2;
  v.hypotheses_hold = v.applicable && v.hyp_winding_ratio && v.hyp_pattern_wraps;
  if (eta_K >= 2) {
    NormBounds nb =
        meridional_norm_bounds(static_cast<int>(eta_K), static_cast<int>(omega_K));
    v.x_K_min = nb.lower;
  } else {
    v.x_K_min = 0;  // eta_K <= 1 forces a trivial region
  }
  v.slope_inequality =
      omega_K * v.x_K_min > static_cast<long long>(d.eta_k) * (d.eta_k - 1);
  v.strengthened = v.applicable && d.omega_k == d.eta_k && d.omega_p >= 2;
  return v;
}

}  // namespace tkt
