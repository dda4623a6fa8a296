// Per-n family reports: every bound per twist parameter, exact slope
// detection over stabilized differences, and CSV/JSON emission.  Output is
// byte-stable: fixed column order, LF line endings, integers only.

#ifndef TKT_REPORT_HPP
#define TKT_REPORT_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tkt/bounds.hpp"
#include "tkt/braid.hpp"
#include "tkt/skein.hpp"
#include "tkt/twist.hpp"

namespace tkt {

struct SlopeEstimate {
  bool stabilized = false;
  long long slope = 0;
  int onset = 0;  // first index of the window with constant differences
  bool operator==(const SlopeEstimate&) const = default;
};

// Eventual-difference detection: stabilized when the trailing differences
// are constant (at least two of them).  Needs length >= 3.
SlopeEstimate slope_estimate(const std::vector<long long>& seq);

struct ReportRow {
  int n = 0;
  long long c_ub = 0;
  long long s = 0;
  long long g_c = 0;
  // polynomial-derived cells are absent past a resource cap
  std::optional<long long> E, e, mfw_lb, ohyama_lb, alex_g_lb, diao_lb;
  long long braid_ub = 0;
  bool operator==(const ReportRow&) const = default;
};

struct ReportVerdicts {
  int eta = 0;
  int omega = 0;
  bool coherent = false;
  NormBounds x{0, 0, false};
  long long c_ub_slope = 0;          // eta (eta - 1)
  SlopeEstimate lower_slope;         // best stabilized crossing lower bound
  bool slopes_agree = false;
  long long genus_2g_slope_lower = 0;  // omega * x
  long long genus_2g_slope_upper = 0;
  bool genus_slope_exact = false;
  SlopeEstimate braid_ub_slope;
  long long braid_slope_cap = 0;     // (eta - omega) / 2
  bool wrap2_applicable = false;     // degree rule for eta = 2, omega = 0
  int wrap2_b_s = 0;
  int wrap2_c_s = 0;
  std::string statement;
  bool operator==(const ReportVerdicts&) const = default;
};

struct StableReport {
  std::string mode;  // diagram | braid | both
  long long c0 = 0;
  std::vector<ReportRow> rows;
  // column -> estimate, fixed column order
  std::vector<std::pair<std::string, SlopeEstimate>> slopes;
  ReportVerdicts verdicts;
  bool resource_capped = false;
  std::uint64_t nodes = 0;
  std::uint64_t memo_hits = 0;
  std::uint64_t node_cap = 0;
  bool operator==(const StableReport&) const = default;
};

enum class ReportMode { diagram, braid, both };

struct FamilyReportOptions {
  SkeinEngine::Options engine;
  // direct skein computation window for eta = 2, omega = 0 families; the
  // closed form takes over past it and must agree on the window itself
  int direct_window = 4;
  // in mode `both`, closures of the family words are checked against the
  // diagram-side polynomials up to this n
  int braid_check_window = 3;
  std::optional<BraidTwistFamily> braid;  // required for braid / both
};

StableReport family_report(const TwistFamily& f, int N, ReportMode mode,
                           const FamilyReportOptions& opt = {});

void emit_csv(const StableReport& r, std::ostream& os);
void emit_json(const StableReport& r, std::ostream& os);
StableReport report_from_json(const std::string& text);

// Polynomial serialization: {"terms": [[l_exp, m_exp, coeff], ...]} sorted
// by exponent pair; coefficients too wide for int64 are decimal strings.
std::string polynomial_to_json(const LaurentPoly2& p);
LaurentPoly2 polynomial_from_json(const std::string& text);

}  // namespace tkt

#endif
