#include "tkt/skein.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>

#include "tkt/errors.hpp"

namespace tkt {

SkeinEngine::Options SkeinEngine::Options::from_env() {
  Options opt;
  if (const char* cap = std::getenv("TKT_NODE_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(cap, &end, 10);
    if (end == cap || *end != '\0' || v == 0)
      throw ParseError("TKT_NODE_CAP must be a positive integer");
    opt.node_cap = v;
  }
  return opt;
}

LaurentPoly2 SkeinEngine::homfly(const LinkDiagram& d) { return eval(d, 0); }

LaurentPoly2 SkeinEngine::eval(const LinkDiagram& input, std::uint64_t depth) {
  LinkDiagram d = opt_.use_simplify ? input.simplified() : input;
  if (d.crossing_count() == 0)
    return LaurentPoly2::delta_power(d.component_count() - 1);

  std::string key = d.canonical_key();
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = memo_.find(key);
    if (it != memo_.end()) {
      ++stats_.memo_hits;
      return it->second;
    }
    ++stats_.nodes;
    stats_.max_depth = std::max(stats_.max_depth, depth);
    if (stats_.nodes > opt_.node_cap)
      throw ResourceCapError("skein node cap of " +
                             std::to_string(opt_.node_cap) + " exceeded");
  }

  LaurentPoly2 result;
  auto bad = d.first_non_descending_crossing();
  if (!bad) {
    result = LaurentPoly2::delta_power(d.component_count() - 1);
  } else {
    int x = *bad;
    LaurentPoly2 p_switch = eval(d.switched(x), depth + 1);
    LaurentPoly2 p_smooth = eval(d.smoothed(x), depth + 1);
    if (d.sign(x) > 0) {
      // d is L+:  P = -l^-2 P(L-) - l^-1 m P(L0)
      result = p_switch.shifted(-2, 0, -1) + p_smooth.shifted(-1, 1, -1);
    } else {
      // d is L-:  P = -l^2 P(L+) - l m P(L0)
      result = p_switch.shifted(2, 0, -1) + p_smooth.shifted(1, 1, -1);
    }
  }

  if (result.is_zero())
    throw std::logic_error("skein engine produced the zero polynomial");
  {
    std::lock_guard<std::mutex> lock(mu_);
    memo_.emplace(std::move(key), result);
  }
  return result;
}

SkeinStats SkeinEngine::stats() const {
  std::lock_guard<std::mutex> lock(mu_);
  return stats_;
}

namespace {

// Laurent polynomials in the single variable A over the Gaussian integers,
// just enough structure for the exact Jones specialization.
using GaussLaurent = std::map<int, GaussInt>;

void gl_add_term(GaussLaurent& p, int e, const GaussInt& c) {
  if (c.is_zero()) return;
  auto it = p.find(e);
  if (it == p.end()) {
    p.emplace(e, c);
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) p.erase(it);
  }
}

GaussLaurent gl_mul(const GaussLaurent& a, const GaussLaurent& b) {
  GaussLaurent r;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) gl_add_term(r, ea + eb, ca * cb);
  return r;
}

// m(A) = i (A^-2 - A^2)
GaussLaurent jones_m() {
  GaussLaurent m;
  m[-2] = GaussInt(0, 1);
  m[2] = GaussInt(0, -1);
  return m;
}

// exact division by jones_m(); the leading coefficient -i is a unit
GaussLaurent gl_div_by_m(GaussLaurent w) {
  const GaussLaurent m = jones_m();
  GaussLaurent q;
  long long guard = 4 * (w.empty() ? 1 : (w.rbegin()->first -
                                          w.begin()->first + 4));
  while (!w.empty()) {
    if (--guard < 0)
      throw std::logic_error("jones specialization: division does not end");
    auto top = *w.rbegin();
    // quotient term: top / (-i A^2) = top * i A^-2
    GaussInt qc = top.second * GaussInt(0, 1);
    int qe = top.first - 2;
    gl_add_term(q, qe, qc);
    for (const auto& [em, cm] : m) gl_add_term(w, qe + em, -(qc * cm));
  }
  return q;
}

}  // namespace

SkeinEngine::JonesResult SkeinEngine::jones_check(const LinkDiagram& d) {
  LaurentPoly2 p = homfly(d);
  int r = d.component_count();

  // W(A) = P(i A^4, m(A)) * m(A)^B with B chosen so all m-powers are >= 0
  int b_shift = std::max(0, -p.min_m_degree());
  int max_pow = p.max_m_degree() + b_shift;
  std::vector<GaussLaurent> m_pow(max_pow + 1);
  m_pow[0] = GaussLaurent{{0, GaussInt(1, 0)}};
  for (int k = 1; k <= max_pow; ++k) m_pow[k] = gl_mul(m_pow[k - 1], jones_m());

  GaussLaurent w;
  for (const auto& [key, coeff] : p.terms()) {
    auto [le, me] = key;
    GaussInt factor = GaussInt::i_power(le) * GaussInt(coeff, 0);
    for (const auto& [em, cm] : m_pow[me + b_shift])
      gl_add_term(w, 4 * le + em, factor * cm);
  }
  for (int k = 0; k < b_shift; ++k) w = gl_div_by_m(std::move(w));

  // evaluate at A = i
  GaussInt value(0, 0);
  for (const auto& [e, c] : w) value = value + c * GaussInt::i_power(e);

  GaussInt expected(1, 0);
  for (int k = 1; k < r; ++k) expected = expected * GaussInt(-2, 0);

  return {value, expected, r, value == expected};
}

LaurentPoly2 twist_closed_form(const LaurentPoly2& p0, const LaurentPoly2& pinf,
                               int n) {
  if (n < 0) throw ValidationError("twist_closed_form needs n >= 0");
  ZInt sgn = (n % 2 == 0) ? 1 : -1;
  LaurentPoly2 result = p0.shifted(2 * n, 0, sgn);
  LaurentPoly2 geometric;  // sum_{j=0}^{n-1} (-l^2)^j
  for (int j = 0; j < n; ++j)
    geometric += LaurentPoly2::monomial(2 * j, 0, (j % 2 == 0) ? 1 : -1);
  result += (geometric * pinf).shifted(1, 1, -1);
  return result;
}

std::pair<int, int> twist_degrees(const LaurentPoly2& p0,
                                  const LaurentPoly2& pinf, int n) {
  if (n < 0) throw ValidationError("twist_degrees needs n >= 0");
  auto [e0_max, e0_min] = ell_degrees(p0);
  auto [ei_max, ei_min] = ell_degrees(pinf);
  if (e0_max == ei_max - 1)
    throw ValidationError(
        "degree hypothesis violated: E[P0] = E[Pinf] - 1, top terms may "
        "cancel");
  return {2 * n + std::max(e0_max, ei_max - 1),
          std::min(2 * n + e0_min, 1 + ei_min)};
}

Wrap2Verdict wrap2_stable_check(const LaurentPoly2& p0,
                                const LaurentPoly2& pinf) {
  if (p0.is_zero() || pinf.is_zero())
    throw ValidationError("wrap2_stable_check needs nonzero polynomials");
  Wrap2Verdict v;
  v.applicable = p0.max_l_degree() != pinf.max_l_degree() - 1;
  return v;
}

int alexander_genus_lb(const LaurentPoly2& p) {
  if (p.is_zero()) throw ValidationError("zero polynomial");
  // knot polynomials have even, non-negative m-powers
  for (const auto& [key, c] : p.terms()) {
    if (key.second < 0 || key.second % 2 != 0)
      throw ValidationError(
          "alexander_genus_lb needs the polynomial of a knot");
  }
  // substitute l = i, m = i z: the term c l^a m^b contributes
  // c i^(a+b) z^b, and a+b is even so the factor is +-1
  std::map<int, ZInt> conway;
  for (const auto& [key, c] : p.terms()) {
    auto [a, b] = key;
    GaussInt f = GaussInt::i_power(a + b);
    if (!f.im.is_zero())
      throw std::logic_error("alexander specialization not real");
    auto it = conway.find(b);
    ZInt add = c * f.re;
    if (it == conway.end()) {
      if (!add.is_zero()) conway.emplace(b, add);
    } else {
      it->second += add;
      if (it->second.is_zero()) conway.erase(it);
    }
  }
  if (conway.empty())
    throw std::logic_error("alexander specialization vanished");
  return conway.rbegin()->first / 2;
}

}  // namespace tkt
