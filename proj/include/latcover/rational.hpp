#pragma once

#include <gmpxx.h>

#include <array>
#include <string>
#include <string_view>

namespace latcover {

// Exact rationals. mpq_class keeps every value in lowest terms with a
// positive denominator.
using Rat = mpq_class;
using BigInt = mpz_class;

Rat parse_rat(std::string_view text);
std::string to_string(const Rat& q);

bool is_integer(const Rat& q);
// True iff q lies in Z + 1/2.
bool is_half_odd(const Rat& q);

/// 2x2 matrix over Q, entries (a b; c d) acting on column vectors.
struct RatMat2 {
  Rat a{0}, b{0}, c{0}, d{0};

  static RatMat2 identity() { return {Rat(1), Rat(0), Rat(0), Rat(1)}; }
  static RatMat2 diag(const Rat& x, const Rat& y) { return {x, Rat(0), Rat(0), y}; }

  Rat det() const { return a * d - b * c; }
  bool is_integral() const;
  // Throws std::domain_error when singular.
  RatMat2 inverse() const;

  RatMat2 operator*(const RatMat2& o) const;
  RatMat2 operator-() const { return {-a, -b, -c, -d}; }
  bool operator==(const RatMat2& o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }

  // Smallest k in [1, max_order] with M^k = id, or 0 if none.
  int order(int max_order = 24) const;
};

RatMat2 pow(const RatMat2& m, int k);

// Text form "a,b;c,d" with rational entries such as 1/3.
RatMat2 parse_ratmat2(std::string_view text);
std::string to_string(const RatMat2& m);

}  // namespace latcover
