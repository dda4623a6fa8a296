// The two-variable link polynomial engine and its degree machinery.
//
// homfly() computes P_L(l, m) from the skein relation
//
//     l P(L+) + l^-1 P(L-) + m P(L0) = 0,      P(unknot) = 1
//
// by switching the first crossing, in basepoint traversal order, whose first
// passage runs under, and smoothing it; descending diagrams evaluate to
// delta^(r-1) with delta = -(l + l^-1) m^-1.  Subtrees are cached by
// canonical key, so one engine can be shared across a whole family run.
// The memo table is safe for concurrent callers: duplicated work is allowed,
// inconsistent results are not.

#ifndef TKT_SKEIN_HPP
#define TKT_SKEIN_HPP

#include <cstdint>
#include <mutex>
#include <string>
#include <unordered_map>
#include <utility>

#include "tkt/diagram.hpp"
#include "tkt/gaussian.hpp"
#include "tkt/laurent.hpp"

namespace tkt {

struct SkeinStats {
  std::uint64_t nodes = 0;
  std::uint64_t memo_hits = 0;
  std::uint64_t max_depth = 0;
};

class SkeinEngine {
 public:
  struct Options {
    std::uint64_t node_cap = 10000000;
    bool use_simplify = true;
    // applies TKT_NODE_CAP when set in the environment
    static Options from_env();
  };

  SkeinEngine() = default;
  explicit SkeinEngine(Options opt) : opt_(opt) {}

  // Throws ResourceCapError when the node budget is exhausted.
  LaurentPoly2 homfly(const LinkDiagram& d);

  struct JonesResult {
    GaussInt value;     // V at A = sqrt(-1), computed symbolically
    GaussInt expected;  // (-2)^(r-1)
    int components = 0;
    bool matches = false;
  };
  // Exact specialization V_L(A) = P_L(i A^4, i (A^-2 - A^2)) at A = sqrt(-1).
  JonesResult jones_check(const LinkDiagram& d);

  SkeinStats stats() const;

 private:
  LaurentPoly2 eval(const LinkDiagram& d, std::uint64_t depth);

  Options opt_;
  mutable std::mutex mu_;
  std::unordered_map<std::string, LaurentPoly2> memo_;
  SkeinStats stats_;
};

// (-l^2)^n P0 + (sum_{j<n} (-l^2)^j) (-l m) Pinf, the n-fold twist recursion
// for an eta = 2, omega = 0 family with resolution polynomial Pinf.
LaurentPoly2 twist_closed_form(const LaurentPoly2& p0,
                               const LaurentPoly2& pinf, int n);

// Predicted extreme l-degrees (E, e) of the n-twisted polynomial:
// E = 2n + max(E0, Einf - 1), e = min(2n + e0, 1 + einf).  Valid for n >= 1;
// requires E0 != Einf - 1, else the top terms may cancel.
std::pair<int, int> twist_degrees(const LaurentPoly2& p0,
                                  const LaurentPoly2& pinf, int n);

struct Wrap2Verdict {
  bool applicable = false;
  int stable_braid_index = 1;  // meaningful only when applicable
  int stable_crossing = 2;
};
// For an eta = 2, omega = 0 family: when E[P0] != E[Pinf] - 1 the stable
// braid index is 1 and the stable crossing number is 2.
Wrap2Verdict wrap2_stable_check(const LaurentPoly2& p0,
                                const LaurentPoly2& pinf);

// Half the breadth of the Alexander specialization, a knot genus lower
// bound.  Requires the polynomial of a knot (even, non-negative m-powers).
int alexander_genus_lb(const LaurentPoly2& p);

}  // namespace tkt

#endif
