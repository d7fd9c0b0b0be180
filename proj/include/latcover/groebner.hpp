#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "latcover/rational.hpp"
#include "latcover/report.hpp"

namespace latcover {

inline constexpr std::size_t kVars = 8;
inline constexpr std::array<const char*, kVars> kVarNames = {"t1", "t2", "t3", "t4", "u1", "u2", "u3", "u4"};

/// Exponent vector over t1..t4, u1..u4.
struct Monomial {
  std::array<std::uint16_t, kVars> e{};

  unsigned degree() const;
  bool divides(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  // Requires divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const;
  Monomial operator*(const Monomial& other) const;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Degree-reverse-lexicographic comparison with t1 > t2 > ... > u4.
bool degrevlex_greater(const Monomial& a, const Monomial& b);

struct Term {
  Monomial m;
  BigInt c;
  friend bool operator==(const Term& x, const Term& y) { return x.m == y.m && x.c == y.c; }
};

/// Sparse polynomial with integer coefficients. Terms are kept strictly
/// decreasing in degrevlex with no zero coefficients, so the first term is
/// the leading term.
class PolyZ {
 public:
  PolyZ() = default;
  static PolyZ constant(const BigInt& c);
  static PolyZ variable(std::size_t i);
  static PolyZ monomial(const BigInt& c, const Monomial& m);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.degree() == 0); }
  const Term& lead() const { return terms_.front(); }
  const std::vector<Term>& terms() const { return terms_; }
  unsigned degree() const;

  PolyZ operator+(const PolyZ& o) const;
  PolyZ operator-(const PolyZ& o) const;
  PolyZ operator-() const;
  PolyZ operator*(const PolyZ& o) const;
  // this * c * m.
  PolyZ scaled(const BigInt& c, const Monomial& m) const;
  // this - c * m * g, the workhorse of reduction.
  PolyZ minus_multiple(const BigInt& c, const Monomial& m, const PolyZ& g) const;

  friend bool operator==(const PolyZ&, const PolyZ&) = default;

 private:
  std::vector<Term> terms_;
};

PolyZ operator*(long c, const PolyZ& p);
BigInt evaluate(const PolyZ& p, std::span<const std::int64_t> point);
std::string to_string(const PolyZ& p);

using IdealBasis = std::vector<PolyZ>;

/// Full reduction of f by `basis` over the integers. A term c*M is reduced by
/// g when LM(g) divides M; c is replaced by its nonnegative Euclidean
/// remainder modulo LC(g), so it vanishes exactly when LC(g) divides c.
PolyZ normal_form(const PolyZ& f, std::span<const PolyZ> basis);

struct GroebnerLimits {
  std::size_t max_basis = 20000;
  std::size_t max_pairs = 5'000'000;
};

class GroebnerLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Strong Groebner basis over Z by Buchberger completion with S-polynomials
/// and GCD-polynomials. Pairs are processed by smallest lcm degree, ties in
/// creation order. The result is minimal: no leading term strongly divides
/// another, and every leading coefficient is positive.
IdealBasis strong_groebner(const IdealBasis& generators, const GroebnerLimits& limits = {});

/// True iff c lies in the ideal generated by `generators`.
bool contains_constant(const IdealBasis& generators, const BigInt& c, const GroebnerLimits& limits = {});

// The named polynomials of the lemma systems: R1, R2, Rsquared1, Rsquared2,
// S1, S2, RS1, RS2, RsquaredS1, RsquaredS2, botR, botRsquared, botS, botRS,
// botRsquaredS, coprime, coprimet1t3, coprimet2t4.
PolyZ lemma_polynomial(const std::string& name);

struct LemmaSystem {
  std::string name;    // e.g. "pair(R,R2)"
  std::string family;  // "pair" or "triple"
  std::vector<std::string> generator_names;
  IdealBasis generators;
  bool expect_contains_3 = true;
};

/// Ten pair systems (two-element order-3 obstruction) followed by ten triple
/// systems (three vanishing first coefficients), in the reference order.
std::vector<LemmaSystem> lemma_systems();

// The pair system for (R^2, S) in its short form (seven
// generators); lemma_systems() carries the nine-generator form.
LemmaSystem pair_R2_S_short();

Report verify_groebner_lemmas(const GroebnerLimits& limits = {});

}  // namespace latcover
