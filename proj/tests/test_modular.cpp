#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "latcover/checked.hpp"
#include "latcover/modular.hpp"
#include "latcover/rational.hpp"

using namespace latcover;

namespace {

std::vector<ResidueTuple> all_tuples(std::int64_t n) {
  std::vector<ResidueTuple> out;
  for (std::int64_t a = 0; a < n; ++a)
    for (std::int64_t b = 0; b < n; ++b)
      for (std::int64_t c = 0; c < n; ++c)
        for (std::int64_t d = 0; d < n; ++d) out.push_back(ResidueTuple::make(a, b, c, d, n));
  return out;
}

std::vector<ResidueTuple> exception_tuples(const ScanReport& r) {
  std::vector<ResidueTuple> v;
  for (const ScanException& e : r.exceptions) v.push_back(e.tuple);
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<ResidueTuple> sorted(std::vector<ResidueTuple> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Literal group order in (Z/n)^2 by repeated addition.
std::int64_t order_by_addition(CoeffPair p, std::int64_t n) {
  std::int64_t k = 1;
  while (mod_floor(k * p.p1, n) != 0 || mod_floor(k * p.p2, n) != 0) ++k;
  return k;
}

bool same_up_to_sign(const Rat& x1, const Rat& x2, std::int64_t y1, std::int64_t y2) {
  return (x1 == y1 && x2 == y2) || (x1 == -y1 && x2 == -y2);
}

}  // namespace

TEST_CASE("top_pairs examples") {
  const auto p = top_pairs(ResidueTuple::make(1, 0, 0, 1, 3));
  const std::array<CoeffPair, 6> want = {{{1, 0}, {0, 1}, {1, 1}, {0, 1}, {1, 0}, {1, 1}}};
  CHECK(p == want);

  const auto z = top_pairs(ResidueTuple::make(0, 1, 0, 1, 3));
  CHECK(z[0] == CoeffPair{1, 0});
  for (std::size_t i = 1; i < 6; ++i) CHECK(z[i] == CoeffPair{0, 0});

  for (const ResidueTuple& t : all_tuples(4)) CHECK(top_pairs(t)[0] == CoeffPair{1, 0});
  CHECK(ResidueTuple::make(-1, 7, 3, -4, 3) == ResidueTuple{{2, 1, 0, 2}, 3});
  CHECK_THROWS_AS(ResidueTuple::make(0, 0, 0, 0, 1), std::invalid_argument);
}

TEST_CASE("bottom_firsts examples") {
  CHECK(bottom_firsts(ResidueTuple::make(1, 0, 1, 0, 3)) == std::array<std::int64_t, 5>{0, 0, 0, 0, 0});
  CHECK(bottom_firsts_exact(1, 0) == std::array<std::int64_t, 5>{1, 1, -1, 1, 0});
  CHECK(bottom_firsts_exact(0, 0) == std::array<std::int64_t, 5>{0, 0, 0, 0, 0});
  CHECK(bottom_firsts_exact(1, 0, SOrientation::T1SquaredMinusT3Squared)[2] == 1);
}

TEST_CASE("both S orientations have the same vanishing set") {
  for (std::int64_t n : {3, 4, 5, 9})
    for (const ResidueTuple& t : all_tuples(n)) {
      const auto a = bottom_firsts(t, SOrientation::T3SquaredMinusT1Squared);
      const auto b = bottom_firsts(t, SOrientation::T1SquaredMinusT3Squared);
      CHECK((a[2] == 0) == (b[2] == 0));
      CHECK(mod_floor(a[2] + b[2], n) == 0);
    }
}

TEST_CASE("class_count examples") {
  const std::vector<CoeffPair> one = {{1, 0}};
  const std::vector<CoeffPair> scaled = {{1, 0}, {2, 0}};
  const std::vector<CoeffPair> low = {{1, 0}, {0, 0}};
  CHECK(class_count(one, 3) == 1);
  CHECK(class_count(scaled, 3) == 1);
  CHECK(class_count(low, 3) == 2);
  const std::vector<CoeffPair> two_low = {{0, 0}, {0, 0}, {1, 1}, {2, 2}, {1, 2}};
  CHECK(class_count(two_low, 3) == 4);
  // Mod 4 the unit 3 identifies (1,2) with (3,2); (2,2) is low-order.
  const std::vector<CoeffPair> m4 = {{1, 2}, {3, 2}, {2, 2}, {2, 1}};
  CHECK(class_count(m4, 4) == 3);
}

TEST_CASE("the gcd low-order test agrees with literal group order for n = 3, 4, 5") {
  for (std::int64_t n : {3, 4, 5})
    for (std::int64_t a = 0; a < n; ++a)
      for (std::int64_t b = 0; b < n; ++b) {
        const CoeffPair p{a, b};
        const bool gcd_low = std::gcd(a, n) != 1 && std::gcd(b, n) != 1;
        CHECK(additive_order(p, n) == order_by_addition(p, n));
        CHECK(gcd_low == (order_by_addition(p, n) < n));
      }
}

TEST_CASE("pair formulas match the conjugated matrices") {
  // adj(T2) g T2 has rows (top pair) and (bottom first, bottom second), up to sign.
  const RatMat2 R{0, 1, -1, -1};
  const RatMat2 S{0, 1, 1, 0};
  const RatMat2 gs[5] = {R, R * R, S, R * S, R * R * S};
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> coef(-20, 20);
  int done = 0;
  while (done < 200) {
    const std::int64_t t1 = coef(rng), t2 = coef(rng), t3 = coef(rng), t4 = coef(rng);
    if (t1 * t4 - t2 * t3 == 0) continue;
    ++done;
    const RatMat2 T{t1, t2, t3, t4};
    const RatMat2 adj{t4, -t2, -t3, t1};
    const auto top = top_pairs_exact(t1, t2, t3, t4);
    const auto firsts = bottom_firsts_exact(t1, t3);
    const auto seconds = bottom_seconds_exact(t1, t2, t3, t4);
    for (std::size_t i = 0; i < 5; ++i) {
      const RatMat2 m = adj * gs[i] * T;
      CHECK(same_up_to_sign(m.a, m.b, top[i + 1].p1, top[i + 1].p2));
      CHECK(same_up_to_sign(m.c, m.d, firsts[i], seconds[i]));
    }
    // Reduction mod n commutes with the formulas.
    const auto red = top_pairs(ResidueTuple::make(t1, t2, t3, t4, 9));
    for (std::size_t i = 0; i < 6; ++i)
      CHECK(red[i] == CoeffPair{mod_floor(top[i].p1, 9), mod_floor(top[i].p2, 9)});
  }
}

TEST_CASE("swapping t1<->t2, t3<->t4 exchanges top and bottom coefficients") {
  // The bottom row of sigma is the top row of the transposed problem.
  for (const ResidueTuple& t : all_tuples(3)) {
    const ResidueTuple sw = ResidueTuple::make(t.t[1], t.t[0], t.t[3], t.t[2], 3);
    const auto top = top_pairs(sw);
    const auto bot = bottom_firsts(t);
    // R and R2 tops share the second coefficient; it becomes the R and R2 bottom first.
    CHECK(top[1].p2 == bot[0]);
    CHECK(top[2].p2 == bot[1]);
    CHECK(top[3].p2 == bot[2]);  // t4^2 - t2^2 becomes t3^2 - t1^2
    CHECK(top[4].p2 == bot[3]);
    CHECK(top[5].p2 == bot[4]);
    // Top first coefficients of R, R2 are symmetric in the swap up to exchanging R and R2.
    CHECK(top_pairs(t)[1].p1 == top[2].p1);
  }
}

TEST_CASE("scan_lZxnx") {
  const ScanReport r5 = scan_lZxnx(5);
  CHECK(r5.passed());
  CHECK(r5.exceptions.empty());

  const ScanReport r3 = scan_lZxnx(3);
  INFO(r3.to_text());
  CHECK(r3.passed());
  CHECK(exception_tuples(r3) == sorted(bad_tuples_mod3()));
  for (const ScanException& e : r3.exceptions)
    for (std::size_t i = 1; i < 6; ++i) CHECK(e.pairs[i] == CoeffPair{0, 0});

  const ScanReport r4 = scan_lZxnx(4);
  INFO(r4.to_text());
  CHECK(r4.passed());
  CHECK(r4.exceptions.size() == 48);
  for (const ScanException& e : r4.exceptions) {
    CHECK(e.count == 4);
    CHECK(std::count(e.pairs.begin(), e.pairs.end(), CoeffPair{2, 0}) == 1);
  }

  CHECK_THROWS_AS(scan_lZxnx(6), std::invalid_argument);
  CHECK_THROWS_AS(scan_lZxnx(2), std::invalid_argument);
}

TEST_CASE("scan_lZxnx(3) agrees with a direct count") {
  std::vector<ResidueTuple> over;
  for (const ResidueTuple& t : all_tuples(3)) {
    if (std::gcd(std::gcd(t.t[1], t.t[3]), std::int64_t{3}) != 1) continue;
    // Independent count: low-order pairs plus projective points of the rest.
    std::set<std::pair<std::int64_t, std::int64_t>> points;
    int low = 0;
    for (const CoeffPair& p : top_pairs(t)) {
      if (p.p1 % 3 == 0 && p.p2 % 3 == 0) {
        ++low;
        continue;
      }
      const std::int64_t inv = p.p1 != 0 ? (p.p1 == 1 ? 1 : 2) : (p.p2 == 1 ? 1 : 2);
      points.insert({p.p1 * inv % 3, p.p2 * inv % 3});
    }
    if (low + static_cast<int>(points.size()) > 3) over.push_back(t);
  }
  CHECK(sorted(over) == sorted(bad_tuples_mod3()));
}

TEST_CASE("the exceptional sets are closed under negation") {
  const auto bad = bad_tuples_mod3();
  for (const ResidueTuple& t : bad) {
    const ResidueTuple neg = ResidueTuple::make(-t.t[0], -t.t[1], -t.t[2], -t.t[3], 3);
    CHECK(std::count(bad.begin(), bad.end(), neg) == 1);
  }
  const auto star = triple_vanishing_tuples_mod3();
  for (const ResidueTuple& t : star) {
    const ResidueTuple neg = ResidueTuple::make(-t.t[0], -t.t[1], -t.t[2], -t.t[3], 3);
    CHECK(std::count(star.begin(), star.end(), neg) == 1);
    CHECK(std::count(bad.begin(), bad.end(), t) == 1);
  }
}

TEST_CASE("badness") {
  const std::vector<CoeffPair> clean = {{1, 0}, {1, 1}, {3, 2}};
  CHECK(badness(clean) == 0);
  const std::vector<CoeffPair> one = {{1, 0}, {0, 1}, {0, 3}};
  CHECK(badness(one) == 1);
  const std::vector<CoeffPair> two = {{1, 0}, {0, 1}, {2, 3}};
  CHECK(badness(two) == 2);
  const std::vector<CoeffPair> low = {{2, 2}, {0, 0}};
  CHECK(badness(low) == 2);
}

TEST_CASE("scan_messfor9") {
  for (const ResidueTuple& rep : {ResidueTuple::make(0, 1, 0, 1, 3), ResidueTuple::make(1, 1, 1, 1, 3),
                                  ResidueTuple::make(1, 2, 1, 2, 3)}) {
    const ScanReport r = scan_messfor9(rep);
    INFO(r.to_text());
    CHECK(r.passed());
    CHECK(r.exceptions.empty());
    CHECK(r.tuples_scanned == 81);
  }
  CHECK_THROWS_AS(scan_messfor9(ResidueTuple::make(0, 2, 0, 2, 3)), std::invalid_argument);
  CHECK_THROWS_AS(scan_messfor9(ResidueTuple::make(1, 0, 0, 1, 3)), std::invalid_argument);
}

TEST_CASE("lifted coefficients are divisible by 3 on the exceptional tuples") {
  for (const ResidueTuple& rep : bad_tuples_mod3())
    for (std::int64_t a = 0; a < 3; ++a)
      for (std::int64_t b = 0; b < 3; ++b)
        for (std::int64_t c = 0; c < 3; ++c)
          for (std::int64_t d = 0; d < 3; ++d) {
            const auto p = top_pairs_exact(3 * a + rep.t[0], 3 * b + rep.t[1], 3 * c + rep.t[2], 3 * d + rep.t[3]);
            for (std::size_t i = 1; i < 6; ++i) {
              CHECK(mod_floor(p[i].p1, 3) == 0);
              CHECK(mod_floor(p[i].p2, 3) == 0);
            }
          }
}

TEST_CASE("scan_triple_vanishing_mod3") {
  const ScanReport r = scan_triple_vanishing_mod3();
  INFO(r.to_text());
  CHECK(r.passed());
  std::vector<ResidueTuple> five;
  std::map<std::int64_t, int> hist;
  for (const ResidueTuple& t : all_tuples(3)) {
    if (std::gcd(std::gcd(t.t[0], t.t[2]), std::int64_t{3}) != 1) continue;
    if (std::gcd(std::gcd(t.t[1], t.t[3]), std::int64_t{3}) != 1) continue;
    const auto p = top_pairs(t);
    const auto count = std::count_if(p.begin() + 1, p.end(), [](const CoeffPair& q) { return q.p1 == 0; });
    ++hist[count];
    if (count == 5) five.push_back(t);
  }
  CHECK(sorted(five) == sorted(triple_vanishing_tuples_mod3()));
  CHECK(hist == std::map<std::int64_t, int>{{0, 24}, {1, 12}, {2, 24}, {5, 4}});
  const auto p = top_pairs(ResidueTuple::make(1, 0, 0, 1, 3));
  const auto c = std::count_if(p.begin() + 1, p.end(), [](const CoeffPair& q) { return q.p1 == 0; });
  CHECK(c <= 2);
}

TEST_CASE("abcd and scan_ABCD_mod9") {
  CHECK(abcd(1, 1) == std::array<std::int64_t, 4>{3, 0, 3, 3});
  CHECK(abcd(1, 0) == std::array<std::int64_t, 4>{1, -1, 1, 0});
  CHECK(mod_floor(abcd(1, 1)[0], 9) != 0);
  const ScanReport r = scan_ABCD_mod9();
  INFO(r.to_text());
  CHECK(r.passed());
  CHECK(r.exceptions.empty());
  // x^2 + x + 1 has no root mod 9.
  for (std::int64_t x = 0; x < 9; ++x) CHECK(mod_floor(x * x + x + 1, 9) != 0);
}

TEST_CASE("scan reports serialize") {
  const ScanReport r = scan_lZxnx(3);
  const auto j = r.to_json();
  CHECK(j["modulus"] == 3);
  CHECK(j["verdicts"]["passed"] == true);
  CHECK(j["exceptions"].size() == 6);
  CHECK(r.to_text().find("(0,1,0,1)") != std::string::npos);
  CHECK(to_string(CoeffPair{2, 0}) == "(2,0)");
}
