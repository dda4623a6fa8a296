// Gaussian integers over ZInt, used for the exact A = sqrt(-1) specialization.

#ifndef TKT_GAUSSIAN_HPP
#define TKT_GAUSSIAN_HPP

#include <string>

#include "tkt/bigint.hpp"

namespace tkt {

struct GaussInt {
  ZInt re;
  ZInt im;

  GaussInt() = default;
  GaussInt(ZInt r, ZInt i) : re(std::move(r)), im(std::move(i)) {}
  GaussInt(long long r, long long i) : re(r), im(i) {}

  bool is_zero() const { return re.is_zero() && im.is_zero(); }

  GaussInt operator+(const GaussInt& o) const { return {re + o.re, im + o.im}; }
  GaussInt operator-(const GaussInt& o) const { return {re - o.re, im - o.im}; }
  GaussInt operator-() const { return {-re, -im}; }
  GaussInt operator*(const GaussInt& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  bool operator==(const GaussInt& o) const { return re == o.re && im == o.im; }
  bool operator!=(const GaussInt& o) const { return !(*this == o); }

  // i^k for any integer k
  static GaussInt i_power(long long k) {
    switch (((k % 4) + 4) % 4) {
      case 0: return {1, 0};
      case 1: return {0, 1};
      case 2: return {-1, 0};
      default: return {0, -1};
    }
  }

  std::string to_string() const {
    if (im.is_zero()) return re.to_string();
    std::string s = re.is_zero() ? "" : re.to_string();
    if (!im.is_negative() && !s.empty()) s += "+";
    s += im.to_string() + "i";
    return s;
  }
};

}  // namespace tkt

#endif
