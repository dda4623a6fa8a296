// Arbitrary-precision signed integer, sized for polynomial coefficient work.
//
// Coefficients of twisted-family polynomials grow with the twist count, so
// all coefficient arithmetic in this project is exact and unbounded.  The
// representation is sign + little-endian base-2^32 magnitude; small values
// stay in a single limb.

#ifndef TKT_BIGINT_HPP
#define TKT_BIGINT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace tkt {

class ZInt {
 public:
  ZInt() = default;
  ZInt(long long v);  // NOLINT: deliberately implicit, coefficients read as literals

  static ZInt from_string(const std::string& s);

  bool is_zero() const { return sign_ == 0; }
  bool is_negative() const { return sign_ < 0; }

  ZInt operator-() const;
  ZInt operator+(const ZInt& o) const;
  ZInt operator-(const ZInt& o) const;
  ZInt operator*(const ZInt& o) const;
  ZInt& operator+=(const ZInt& o) { return *this = *this + o; }
  ZInt& operator-=(const ZInt& o) { return *this = *this - o; }
  ZInt& operator*=(const ZInt& o) { return *this = *this * o; }

  bool operator==(const ZInt& o) const {
    return sign_ == o.sign_ && limbs_ == o.limbs_;
  }
  bool operator!=(const ZInt& o) const { return !(*this == o); }
  bool operator<(const ZInt& o) const;

  // True when the value fits in int64_t exactly.
  bool fits_int64() const;
  long long to_int64() const;  // valid only when fits_int64()

  std::string to_string() const;

 private:
  // limbs_ has no trailing zero limb; zero is sign_ == 0 with empty limbs_.
  int sign_ = 0;
  std::vector<std::uint32_t> limbs_;

  static int cmp_mag(const std::vector<std::uint32_t>& a,
                     const std::vector<std::uint32_t>& b);
  static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b);
  // requires |a| >= |b|
  static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b);
  void trim();
};

}  // namespace tkt

#endif
