// Exact bivariate Laurent polynomials in (l, m) with ZInt coefficients.
//
// These carry the two-variable link polynomial computed by the skein engine.
// Terms are kept in a sorted map keyed by (l-exponent, m-exponent); stored
// coefficients are never zero.

#ifndef TKT_LAURENT_HPP
#define TKT_LAURENT_HPP

#include <map>
#include <string>
#include <utility>

#include "tkt/bigint.hpp"

namespace tkt {

class LaurentPoly2 {
 public:
  using Key = std::pair<int, int>;  // (l exponent, m exponent)
  using TermMap = std::map<Key, ZInt>;

  LaurentPoly2() = default;

  static LaurentPoly2 zero() { return LaurentPoly2(); }
  static LaurentPoly2 one() { return monomial(0, 0, 1); }
  static LaurentPoly2 monomial(int l_exp, int m_exp, ZInt coeff);
  // delta = -(l + l^-1) m^-1, the split-component multiplier
  static LaurentPoly2 delta();
  static LaurentPoly2 delta_power(int k);

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  LaurentPoly2 operator+(const LaurentPoly2& o) const;
  LaurentPoly2 operator-(const LaurentPoly2& o) const;
  LaurentPoly2 operator*(const LaurentPoly2& o) const;
  LaurentPoly2 operator-() const;
  LaurentPoly2& operator+=(const LaurentPoly2& o) { return *this = *this + o; }
  LaurentPoly2& operator-=(const LaurentPoly2& o) { return *this = *this - o; }
  LaurentPoly2& operator*=(const LaurentPoly2& o) { return *this = *this * o; }

  // multiply by coeff * l^dl * m^dm, in place
  LaurentPoly2 shifted(int dl, int dm, const ZInt& coeff = 1) const;

  bool operator==(const LaurentPoly2& o) const { return terms_ == o.terms_; }
  bool operator!=(const LaurentPoly2& o) const { return terms_ != o.terms_; }

  // max/min l exponent; throws std::domain_error on the zero polynomial
  int max_l_degree() const;
  int min_l_degree() const;
  int max_m_degree() const;
  int min_m_degree() const;

  // substitution l -> l^-1 (the mirror substitution)
  LaurentPoly2 invert_l() const;

  // Display form: m powers descending, with l-polynomial coefficients.
  std::string pretty() const;

 private:
  TermMap terms_;
  void add_term(int l_exp, int m_exp, const ZInt& c);
};

// (E, e) = extreme l-degrees of a nonzero polynomial.
std::pair<int, int> ell_degrees(const LaurentPoly2& p);

}  // namespace tkt

#endif
