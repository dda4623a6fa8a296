#include "tkt/laurent.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

namespace tkt {

void LaurentPoly2::add_term(int l_exp, int m_exp, const ZInt& c) {
  if (c.is_zero()) return;
  Key k{l_exp, m_exp};
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LaurentPoly2 LaurentPoly2::monomial(int l_exp, int m_exp, ZInt coeff) {
  LaurentPoly2 p;
  p.add_term(l_exp, m_exp, coeff);
  return p;
}

LaurentPoly2 LaurentPoly2::delta() {
  LaurentPoly2 p;
  p.add_term(1, -1, -1);
  p.add_term(-1, -1, -1);
  return p;
}

LaurentPoly2 LaurentPoly2::delta_power(int k) {
  LaurentPoly2 p = one();
  for (int i = 0; i < k; ++i) p *= delta();
  return p;
}

LaurentPoly2 LaurentPoly2::operator+(const LaurentPoly2& o) const {
  LaurentPoly2 r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k.first, k.second, c);
  return r;
}

LaurentPoly2 LaurentPoly2::operator-(const LaurentPoly2& o) const {
  LaurentPoly2 r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k.first, k.second, -c);
  return r;
}

LaurentPoly2 LaurentPoly2::operator-() const {
  LaurentPoly2 r;
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
  return r;
}

LaurentPoly2 LaurentPoly2::operator*(const LaurentPoly2& o) const {
  LaurentPoly2 r;
  for (const auto& [ka, ca] : terms_)
    for (const auto& [kb, cb] : o.terms_)
      r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
  return r;
}

LaurentPoly2 LaurentPoly2::shifted(int dl, int dm, const ZInt& coeff) const {
  LaurentPoly2 r;
  if (coeff.is_zero()) return r;
  for (const auto& [k, c] : terms_)
    r.terms_.emplace(Key{k.first + dl, k.second + dm}, c * coeff);
  return r;
}

int LaurentPoly2::max_l_degree() const {
  if (terms_.empty()) throw std::domain_error("degree of zero polynomial");
  return terms_.rbegin()->first.first;
}

int LaurentPoly2::min_l_degree() const {
  if (terms_.empty()) throw std::domain_error("degree of zero polynomial");
  return terms_.begin()->first.first;
}

int LaurentPoly2::max_m_degree() const {
  if (terms_.empty()) throw std::domain_error("degree of zero polynomial");
  int best = terms_.begin()->first.second;
  for (const auto& [k, c] : terms_) best = std::max(best, k.second);
  return best;
}

int LaurentPoly2::min_m_degree() const {
  if (terms_.empty()) throw std::domain_error("degree of zero polynomial");
  int best = terms_.begin()->first.second;
  for (const auto& [k, c] : terms_) best = std::min(best, k.second);
  return best;
}

LaurentPoly2 LaurentPoly2::invert_l() const {
  LaurentPoly2 r;
  for (const auto& [k, c] : terms_)
    r.terms_.emplace(Key{-k.first, k.second}, c);
  return r;
}

namespace {

std::string power_str(const std::string& var, int e) {
  if (e == 0) return "1";
  if (e == 1) return var;
  return var + "^" + std::to_string(e);
}

// renders c * var^e as a signed summand, e.g. "- 2 l^3"
void append_term(std::string& out, bool first, const ZInt& c,
                 const std::string& var, int e) {
  ZInt a = c;
  bool neg = a.is_negative();
  if (neg) a = -a;
  if (first) {
    if (neg) out += "-";
  } else {
    out += neg ? " - " : " + ";
  }
  std::string mag = a.to_string();
  if (mag == "1" && e != 0) {
    out += power_str(var, e);
  } else {
    out += mag;
    if (e != 0) out += " " + power_str(var, e);
  }
}

}  // namespace

std::string LaurentPoly2::pretty() const {
  if (terms_.empty()) return "0";
  // group by m exponent, descending
  std::set<int, std::greater<int>> m_exps;
  for (const auto& [k, c] : terms_) m_exps.insert(k.second);
  std::string out;
  bool first_group = true;
  for (int me : m_exps) {
    std::vector<std::pair<int, ZInt>> group;  // (l exp, coeff), l descending
    for (const auto& [k, c] : terms_)
      if (k.second == me) group.emplace_back(k.first, c);
    std::sort(group.begin(), group.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });

    if (group.size() == 1) {
      const auto& [le, c] = group[0];
      if (le == 0) {
        append_term(out, first_group, c, "m", me);
      } else {
        // coefficient +-1 merges into the variable part
        ZInt a = c;
        bool neg = a.is_negative();
        if (neg) a = -a;
        std::string mag = a.to_string();
        if (first_group) {
          if (neg) out += "-";
        } else {
          out += neg ? " - " : " + ";
        }
        if (mag != "1") out += mag + " ";
        out += power_str("l", le);
        if (me != 0) out += " " + power_str("m", me);
      }
    } else {
      std::string inner;
      bool first_inner = true;
      for (const auto& [le, c] : group) {
        append_term(inner, first_inner, c, "l", le);
        first_inner = false;
      }
      if (!first_group) out += " + ";
      out += "(" + inner + ")";
      if (me != 0) out += " " + power_str("m", me);
    }
    first_group = false;
  }
  return out;
}

std::pair<int, int> ell_degrees(const LaurentPoly2& p) {
  return {p.max_l_degree(), p.min_l_degree()};
}

}  // namespace tkt
