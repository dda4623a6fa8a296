// Shared test fixtures: small standard diagrams and frozen polynomial
// values.  The frozen polynomials were derived by resolving the skein
// relation by hand from the axioms; the engine must reproduce them exactly.

#ifndef TKT_TESTS_FIXTURES_HPP
#define TKT_TESTS_FIXTURES_HPP

#include <vector>

#include "tkt/braid.hpp"
#include "tkt/diagram.hpp"
#include "tkt/laurent.hpp"

namespace fx {

inline tkt::LinkDiagram braid_closure(int strands, std::vector<int> word) {
  tkt::BraidWord b;
  b.strands = strands;
  b.word = std::move(word);
  return tkt::closure(b);
}

inline tkt::LinkDiagram unknot() { return tkt::LinkDiagram::unknot(); }

inline tkt::LinkDiagram trefoil_pd() {
  return tkt::LinkDiagram::parse_pd("PD[X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)]");
}

inline tkt::LinkDiagram hopf() { return braid_closure(2, {1, 1}); }

inline tkt::LinkDiagram fig8() { return braid_closure(3, {1, -2, 1, -2}); }

// torus knot/link T(2, k)
inline tkt::LinkDiagram torus2(int k) {
  return braid_closure(2, std::vector<int>(k, 1));
}

inline tkt::LaurentPoly2 mono(int l, int m, long long c) {
  return tkt::LaurentPoly2::monomial(l, m, c);
}

// right-handed trefoil (writhe +3): l^-2 m^2 - 2 l^-2 - l^-4
inline tkt::LaurentPoly2 trefoil_poly() {
  return mono(-2, 2, 1) + mono(-2, 0, -2) + mono(-4, 0, -1);
}

// positive Hopf link: (l^-1 + l^-3) m^-1 - l^-1 m
inline tkt::LaurentPoly2 hopf_poly() {
  return mono(-1, -1, 1) + mono(-3, -1, 1) + mono(-1, 1, -1);
}

// the figure-eight knot with a meridional circle:
// -l m^3 + (2 l^3 + 2 l + l^-1) m + (-l^5 - 2 l^3 - 2 l - l^-1) m^-1
inline tkt::LaurentPoly2 fig8_meridian_poly() {
  return mono(1, 3, -1) + mono(3, 1, 2) + mono(1, 1, 2) + mono(-1, 1, 1) +
         mono(5, -1, -1) + mono(3, -1, -2) + mono(1, -1, -2) +
         mono(-1, -1, -1);
}

// The figure-eight knot with a meridional circle, built so that its
// polynomial equals fig8_meridian_poly() exactly.
inline tkt::LinkDiagram fig8_meridian_link() {
  return tkt::LinkDiagram::parse_pd(
      "PD[X(2,11,3,12),X(4,10,5,9),X(6,3,7,4),X(8,6,9,5),X(10,7,1,8),"
      "X(11,2,12,1)]");
}

// The eta = 2, omega = 0 family whose base is a 6-crossing unknot diagram
// and whose resolution is fig8_meridian_link(): the clasp family behind the
// twist-recursion fixtures.
inline tkt::TwistFamily clasp_unknot_family() {
  tkt::LinkDiagram base = tkt::LinkDiagram::parse_pd(
      "PD[X(2,8,3,7),X(4,12,5,11),X(6,3,7,4),X(8,2,9,1),X(10,6,11,5),"
      "X(12,9,1,10)]");
  return tkt::TwistFamily::make(std::move(base),
                                tkt::TwistRegion({{1, 1}, {3, -1}}));
}

// a small battery of oriented diagrams for the property suites
inline std::vector<tkt::LinkDiagram> property_fixtures() {
  return {
      trefoil_pd(),
      trefoil_pd().mirrored(),
      hopf(),
      fig8(),
      torus2(5),
      braid_closure(3, {1, 2, 1, 2}),       // trefoil as a 3-braid
      braid_closure(3, {1, -2, 1, -2, 1}),  // 5-crossing knot
      disjoint_union(hopf(), unknot()),
      fig8_meridian_link(),
  };
}

}  // namespace fx

#endif
