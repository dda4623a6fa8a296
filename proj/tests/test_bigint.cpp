#include <doctest.h>

#include "tkt/bigint.hpp"
#include "tkt/gaussian.hpp"

using tkt::GaussInt;
using tkt::ZInt;

TEST_CASE("small integer arithmetic matches int64") {
  // deterministic pseudo-random probes
  unsigned long long state = 0x243f6a8885a308d3ull;
  auto next = [&] {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return static_cast<long long>(state % 2000001) - 1000000;
  };
  for (int i = 0; i < 500; ++i) {
    long long a = next(), b = next();
    CHECK((ZInt(a) + ZInt(b)) == ZInt(a + b));
    CHECK((ZInt(a) - ZInt(b)) == ZInt(a - b));
    CHECK((ZInt(a) * ZInt(b)) == ZInt(a * b));
    CHECK((ZInt(a) < ZInt(b)) == (a < b));
  }
}

TEST_CASE("growth past 64 bits stays exact") {
  ZInt p = 1;
  for (int i = 0; i < 100; ++i) p *= 2;
  // 2^100
  CHECK(p.to_string() == "1267650600228229401496703205376");
  CHECK(!p.fits_int64());
  CHECK(ZInt::from_string(p.to_string()) == p);
  CHECK((p - p).is_zero());
  CHECK((p * ZInt(-1)).to_string() == "-1267650600228229401496703205376");

  // distributivity probe at width
  ZInt q = p + 12345;
  CHECK(q * (p - 7) == q * p - q * 7);
}

TEST_CASE("int64 boundary round trips") {
  for (long long v : {0ll, 1ll, -1ll, 4294967296ll, -4294967296ll,
                      9223372036854775807ll}) {
    CHECK(ZInt(v).fits_int64());
    CHECK(ZInt(v).to_int64() == v);
    CHECK(ZInt::from_string(ZInt(v).to_string()) == ZInt(v));
  }
  ZInt max64(9223372036854775807ll);
  CHECK(!(max64 + 1).fits_int64());
  CHECK((-(max64 + 1)).fits_int64());  // -2^63 still fits
}

TEST_CASE("gaussian units and powers") {
  GaussInt i(0, 1);
  CHECK(i * i == GaussInt(-1, 0));
  CHECK(GaussInt::i_power(-1) == GaussInt(0, -1));
  CHECK(GaussInt::i_power(4) == GaussInt(1, 0));
  GaussInt z(3, -2);
  CHECK(z * GaussInt(1, 0) == z);
  CHECK((z - z).is_zero());
  CHECK(z * i * i * i * i == z);
}
