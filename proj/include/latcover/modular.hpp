#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "latcover/report.hpp"

namespace latcover {

/// (t1, t2, t3, t4) reduced componentwise mod n.
struct ResidueTuple {
  std::array<std::int64_t, 4> t{};
  std::int64_t n = 3;

  static ResidueTuple make(std::int64_t t1, std::int64_t t2, std::int64_t t3, std::int64_t t4, std::int64_t n);
  friend bool operator==(const ResidueTuple&, const ResidueTuple&) = default;
  friend auto operator<=>(const ResidueTuple&, const ResidueTuple&) = default;
};

struct CoeffPair {
  std::int64_t p1 = 0;
  std::int64_t p2 = 0;
  friend bool operator==(const CoeffPair&, const CoeffPair&) = default;
  friend auto operator<=>(const CoeffPair&, const CoeffPair&) = default;
};

// Element order used by every pair/residue list: id, R, R^2, S, RS, R^2S.
inline constexpr std::array<const char*, 6> kSigmaNames = {"id", "R", "R2", "S", "RS", "R2S"};

/// Integer (unreduced) x1/x2 coefficients of the top equation for each
/// sigma; id contributes (1, 0).
std::array<CoeffPair, 6> top_pairs_exact(std::int64_t t1, std::int64_t t2, std::int64_t t3, std::int64_t t4);
std::array<CoeffPair, 6> top_pairs(const ResidueTuple& t);

// Sign convention for the S entry of the bottom first coefficients.
enum class SOrientation { T3SquaredMinusT1Squared, T1SquaredMinusT3Squared };

/// First coefficient of the bottom equation for R, R^2, S, RS, R^2S. Depends
/// on t1 and t3 only.
std::array<std::int64_t, 5> bottom_firsts_exact(std::int64_t t1, std::int64_t t3,
                                                SOrientation s = SOrientation::T3SquaredMinusT1Squared);
std::array<std::int64_t, 5> bottom_firsts(const ResidueTuple& t,
                                          SOrientation s = SOrientation::T3SquaredMinusT1Squared);

// Second coefficient of the bottom equation for R, R^2, S, RS, R^2S.
std::array<std::int64_t, 5> bottom_seconds_exact(std::int64_t t1, std::int64_t t2, std::int64_t t3, std::int64_t t4);

/// Number of pairs with both coordinates sharing a factor with n, plus the
/// number of classes of the remaining pairs under scaling by units mod n.
std::int64_t class_count(std::span<const CoeffPair> pairs, std::int64_t n);

// Literal order of a pair in (Z/n)^2 as a group element.
std::int64_t additive_order(CoeffPair p, std::int64_t n);

struct ScanException {
  ResidueTuple tuple;
  std::int64_t count = 0;
  std::array<CoeffPair, 6> pairs{};
};

/// Result of a finite scan: every exceptional tuple (no early exit) and one
/// verdict per claim, derived from the scan alone.
struct ScanReport {
  std::int64_t modulus = 0;
  std::string scan;
  std::size_t tuples_scanned = 0;
  std::vector<ScanException> exceptions;
  Report verdicts;

  bool passed() const { return verdicts.passed(); }
  nlohmann::ordered_json to_json() const;
  std::string to_text() const;
};

// The six residue tuples mod 3 where the top count exceeds 3, and the four
// where five top first coefficients vanish.
std::vector<ResidueTuple> bad_tuples_mod3();
std::vector<ResidueTuple> triple_vanishing_tuples_mod3();

/// Top-pair class count over (Z/x)^4 with gcd(t2, t4, x) = 1, x in {3,4,5}.
ScanReport scan_lZxnx(std::int64_t x);

// Badness score for x = 4; the claim is that it never exceeds 1.
int badness(std::span<const CoeffPair> pairs);

/// Lifts t = 3a + rep over a in (Z/3)^4 and counts classes of the divided
/// coefficients mod 3. rep must be (0,1,0,1), (1,1,1,1) or (1,2,1,2).
ScanReport scan_messfor9(const ResidueTuple& rep);

/// Counts sigma != id with vanishing top first coefficient mod 3.
ScanReport scan_triple_vanishing_mod3();

// A = U^2+UV+V^2, B = V^2-U^2, C = U^2+2UV, D = V^2+2UV.
std::array<std::int64_t, 4> abcd(std::int64_t u, std::int64_t v);
ScanReport scan_ABCD_mod9();

std::string to_string(const ResidueTuple& t);
std::string to_string(const CoeffPair& p);

}  // namespace latcover
