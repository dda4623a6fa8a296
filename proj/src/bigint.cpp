#include "tkt/bigint.hpp"

#include <algorithm>
#include <stdexcept>

namespace tkt {

ZInt::ZInt(long long v) {
  if (v == 0) return;
  sign_ = v < 0 ? -1 : 1;
  // avoid UB on LLONG_MIN
  unsigned long long mag =
      v < 0 ? ~static_cast<unsigned long long>(v) + 1ull
            : static_cast<unsigned long long>(v);
  while (mag != 0) {
    limbs_.push_back(static_cast<std::uint32_t>(mag & 0xffffffffull));
    mag >>= 32;
  }
}

ZInt ZInt::from_string(const std::string& s) {
  ZInt r;
  std::size_t i = 0;
  int sign = 1;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
    if (s[i] == '-') sign = -1;
    ++i;
  }
  if (i >= s.size()) throw std::invalid_argument("ZInt: empty numeral");
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9')
      throw std::invalid_argument("ZInt: bad digit in numeral");
    r = r * ZInt(10) + ZInt(s[i] - '0');
  }
  if (sign < 0) r = -r;
  return r;
}

void ZInt::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  if (limbs_.empty()) sign_ = 0;
}

int ZInt::cmp_mag(const std::vector<std::uint32_t>& a,
                  const std::vector<std::uint32_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

std::vector<std::uint32_t> ZInt::add_mag(const std::vector<std::uint32_t>& a,
                                         const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> r;
  r.reserve(std::max(a.size(), b.size()) + 1);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
    std::uint64_t t = carry;
    if (i < a.size()) t += a[i];
    if (i < b.size()) t += b[i];
    r.push_back(static_cast<std::uint32_t>(t & 0xffffffffull));
    carry = t >> 32;
  }
  if (carry) r.push_back(static_cast<std::uint32_t>(carry));
  return r;
}

std::vector<std::uint32_t> ZInt::sub_mag(const std::vector<std::uint32_t>& a,
                                         const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> r;
  r.reserve(a.size());
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::int64_t t = static_cast<std::int64_t>(a[i]) - borrow -
                     (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
    borrow = 0;
    if (t < 0) {
      t += (1ll << 32);
      borrow = 1;
    }
    r.push_back(static_cast<std::uint32_t>(t));
  }
  return r;
}

ZInt ZInt::operator-() const {
  ZInt r = *this;
  r.sign_ = -r.sign_;
  return r;
}

ZInt ZInt::operator+(const ZInt& o) const {
  if (sign_ == 0) return o;
  if (o.sign_ == 0) return *this;
  ZInt r;
  if (sign_ == o.sign_) {
    r.sign_ = sign_;
    r.limbs_ = add_mag(limbs_, o.limbs_);
  } else {
    int c = cmp_mag(limbs_, o.limbs_);
    if (c == 0) return ZInt();
    if (c > 0) {
      r.sign_ = sign_;
      r.limbs_ = sub_mag(limbs_, o.limbs_);
    } else {
      r.sign_ = o.sign_;
      r.limbs_ = sub_mag(o.limbs_, limbs_);
    }
  }
  r.trim();
  return r;
}

ZInt ZInt::operator-(const ZInt& o) const { return *this + (-o); }

ZInt ZInt::operator*(const ZInt& o) const {
  if (sign_ == 0 || o.sign_ == 0) return ZInt();
  ZInt r;
  r.sign_ = sign_ * o.sign_;
  r.limbs_.assign(limbs_.size() + o.limbs_.size(), 0);
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < o.limbs_.size(); ++j) {
      std::uint64_t t = static_cast<std::uint64_t>(limbs_[i]) * o.limbs_[j] +
                        r.limbs_[i + j] + carry;
      r.limbs_[i + j] = static_cast<std::uint32_t>(t & 0xffffffffull);
      carry = t >> 32;
    }
    std::size_t k = i + o.limbs_.size();
    while (carry) {
      std::uint64_t t = r.limbs_[k] + carry;
      r.limbs_[k] = static_cast<std::uint32_t>(t & 0xffffffffull);
      carry = t >> 32;
      ++k;
    }
  }
  r.trim();
  return r;
}

bool ZInt::operator<(const ZInt& o) const {
  if (sign_ != o.sign_) return sign_ < o.sign_;
  int c = cmp_mag(limbs_, o.limbs_);
  return sign_ >= 0 ? c < 0 : c > 0;
}

bool ZInt::fits_int64() const {
  if (limbs_.size() < 2) return true;
  if (limbs_.size() > 2) return false;
  std::uint64_t mag =
      (static_cast<std::uint64_t>(limbs_[1]) << 32) | limbs_[0];
  return sign_ > 0 ? mag <= 0x7fffffffffffffffull
                   : mag <= 0x8000000000000000ull;
}

long long ZInt::to_int64() const {
  if (!fits_int64()) throw std::overflow_error("ZInt: does not fit int64");
  std::uint64_t mag = 0;
  if (limbs_.size() > 0) mag |= limbs_[0];
  if (limbs_.size() > 1) mag |= static_cast<std::uint64_t>(limbs_[1]) << 32;
  if (sign_ < 0) return static_cast<long long>(~mag + 1ull);
  return static_cast<long long>(mag);
}

std::string ZInt::to_string() const {
  if (sign_ == 0) return "0";
  // repeated division of the magnitude by 10^9
  std::vector<std::uint32_t> mag = limbs_;
  std::string digits;
  while (!mag.empty()) {
    std::uint64_t rem = 0;
    for (std::size_t i = mag.size(); i-- > 0;) {
      std::uint64_t cur = (rem << 32) | mag[i];
      mag[i] = static_cast<std::uint32_t>(cur / 1000000000ull);
      rem = cur % 1000000000ull;
    }
    while (!mag.empty() && mag.back() == 0) mag.pop_back();
    for (int k = 0; k < 9; ++k) {
      digits.push_back(static_cast<char>('0' + rem % 10));
      rem /= 10;
    }
  }
  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
  if (sign_ < 0) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

}  // namespace tkt
