#include "latcover/modular.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "latcover/checked.hpp"

namespace latcover {

namespace {

using i128 = __int128;

std::int64_t narrow(i128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("coefficient exceeds 64 bits");
  return static_cast<std::int64_t>(v);
}

CoeffPair reduce(CoeffPair p, std::int64_t n) { return {mod_floor(p.p1, n), mod_floor(p.p2, n)}; }

bool coprime3(std::int64_t a, std::int64_t b, std::int64_t n) { return std::gcd(std::gcd(a, b), n) == 1; }

}  // namespace

ResidueTuple ResidueTuple::make(std::int64_t t1, std::int64_t t2, std::int64_t t3, std::int64_t t4, std::int64_t n) {
  if (n < 2) throw std::invalid_argument("modulus must be at least 2");
  return {{mod_floor(t1, n), mod_floor(t2, n), mod_floor(t3, n), mod_floor(t4, n)}, n};
}

std::array<CoeffPair, 6> top_pairs_exact(std::int64_t t1, std::int64_t t2, std::int64_t t3, std::int64_t t4) {
  const i128 a = t1, b = t2, c = t3, d = t4;
  const std::int64_t r2 = narrow(b * b + b * d + d * d);
  return {{
      {1, 0},
      {narrow(a * b + b * c + c * d), r2},
      {narrow(a * b + a * d + c * d), r2},
      {narrow(c * d - a * b), narrow(d * d - b * b)},
      {narrow(a * b + a * d + b * c), narrow(b * b + 2 * b * d)},
      {narrow(a * d + b * c + c * d), narrow(d * d + 2 * b * d)},
  }};
}

std::array<CoeffPair, 6> top_pairs(const ResidueTuple& t) {
  auto pairs = top_pairs_exact(t.t[0], t.t[1], t.t[2], t.t[3]);
  for (CoeffPair& p : pairs) p = reduce(p, t.n);
  return pairs;
}

std::array<std::int64_t, 5> bottom_firsts_exact(std::int64_t t1, std::int64_t t3, SOrientation s) {
  const i128 a = t1, c = t3;
  const std::int64_t r = narrow(a * a + a * c + c * c);
  const std::int64_t sv = narrow(s == SOrientation::T3SquaredMinusT1Squared ? c * c - a * a : a * a - c * c);
  return {r, r, sv, narrow(a * a + 2 * a * c), narrow(c * c + 2 * a * c)};
}

std::array<std::int64_t, 5> bottom_firsts(const ResidueTuple& t, SOrientation s) {
  auto v = bottom_firsts_exact(t.t[0], t.t[2], s);
  for (auto& x : v) x = mod_floor(x, t.n);
  return v;
}

std::array<std::int64_t, 5> bottom_seconds_exact(std::int64_t t1, std::int64_t t2, std::int64_t t3, std::int64_t t4) {
  const i128 a = t1, b = t2, c = t3, d = t4;
  return {narrow(a * b + a * d + c * d), narrow(a * b + b * c + c * d), narrow(c * d - a * b),
          narrow(a * b + a * d + b * c), narrow(a * d + b * c + c * d)};
}

// A pair is low-order when both coordinates
// share a factor with n; otherwise it is new unless a unit multiple of it
// appeared earlier.
std::int64_t class_count(std::span<const CoeffPair> pairs, std::int64_t n) {
  std::int64_t total = 0;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const CoeffPair p = reduce(pairs[i], n);
    if (std::gcd(p.p1, n) != 1 && std::gcd(p.p2, n) != 1) {
      ++total;
      continue;
    }
    bool fresh = true;
    for (std::size_t j = 0; j < i && fresh; ++j) {
      const CoeffPair q = reduce(pairs[j], n);
      for (std::int64_t k = 1; k < n; ++k)
        if (std::gcd(k, n) == 1 && mod_floor(k * p.p1, n) == q.p1 && mod_floor(k * p.p2, n) == q.p2) fresh = false;
    }
    if (fresh) ++total;
  }
  return total;
}

std::int64_t additive_order(CoeffPair p, std::int64_t n) {
  p = reduce(p, n);
  return n / std::gcd(std::gcd(p.p1, p.p2), n);
}

std::vector<ResidueTuple> bad_tuples_mod3() {
  return {ResidueTuple::make(0, 1, 0, 1, 3), ResidueTuple::make(0, 2, 0, 2, 3), ResidueTuple::make(1, 1, 1, 1, 3),
          ResidueTuple::make(2, 2, 2, 2, 3), ResidueTuple::make(1, 2, 1, 2, 3), ResidueTuple::make(2, 1, 2, 1, 3)};
}

std::vector<ResidueTuple> triple_vanishing_tuples_mod3() {
  return {ResidueTuple::make(1, 1, 1, 1, 3), ResidueTuple::make(2, 2, 2, 2, 3), ResidueTuple::make(1, 2, 1, 2, 3),
          ResidueTuple::make(2, 1, 2, 1, 3)};
}

int badness(std::span<const CoeffPair> pairs) {
  int counter = 0;
  bool first = true, second = true;
  for (const CoeffPair& p : pairs) {
    if (first && p.p1 == 0 && (p.p2 == 1 || p.p2 == 3)) {
      ++counter;
      first = false;
    }
    if (second && p.p1 == 2 && (p.p2 == 1 || p.p2 == 3)) {
      ++counter;
      second = false;
    }
    if ((p.p1 == 0 || p.p1 == 2) && (p.p2 == 0 || p.p2 == 2)) ++counter;
  }
  return counter;
}

namespace {

template <class F>
void for_each_tuple(std::int64_t n, F&& f) {
  for (std::int64_t a = 0; a < n; ++a)
    for (std::int64_t b = 0; b < n; ++b)
      for (std::int64_t c = 0; c < n; ++c)
        for (std::int64_t d = 0; d < n; ++d) f(ResidueTuple{{a, b, c, d}, n});
}

std::string list(const std::vector<ResidueTuple>& ts) {
  std::string s;
  for (const ResidueTuple& t : ts) s += (s.empty() ? "" : " ") + to_string(t);
  return s.empty() ? "none" : s;
}

bool same_set(std::vector<ResidueTuple> x, std::vector<ResidueTuple> y) {
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y;
}

}  // namespace

ScanReport scan_lZxnx(std::int64_t x) {
  if (x != 3 && x != 4 && x != 5) throw std::invalid_argument("scan_lZxnx needs x in {3, 4, 5}");
  ScanReport r;
  r.modulus = x;
  r.scan = "lZxnx";
  r.verdicts.title = "top class count mod " + std::to_string(x);

  std::vector<ResidueTuple> bad_badness;
  std::vector<ResidueTuple> unexplained;  // x = 4 exceptions not explained by a single (2,0) pair
  for_each_tuple(x, [&](const ResidueTuple& t) {
    ++r.tuples_scanned;
    const auto pairs = top_pairs(t);
    const std::int64_t count = class_count(pairs, x);
    if (x == 4 && badness(pairs) > 1 && coprime3(t.t[0], t.t[2], 2) && coprime3(t.t[1], t.t[3], 2))
      bad_badness.push_back(t);
    if (count <= 3 || !coprime3(t.t[1], t.t[3], x)) return;
    r.exceptions.push_back({t, count, pairs});
    if (x == 4) {
      const auto low = std::count_if(pairs.begin(), pairs.end(), [](CoeffPair p) { return p.p1 % 2 == 0 && p.p2 % 2 == 0; });
      const bool has20 = std::find(pairs.begin(), pairs.end(), CoeffPair{2, 0}) != pairs.end();
      if (count != 4 || low != 1 || !has20) unexplained.push_back(t);
    }
  });

  std::vector<ResidueTuple> exc;
  for (const ScanException& e : r.exceptions) exc.push_back(e.tuple);

  if (x == 5) {
    r.verdicts.add("count_at_most_3", exc.empty(), std::to_string(exc.size()) + " tuples with count > 3: " + list(exc));
  } else if (x == 4) {
    r.verdicts.add("x4.count_4_only_via_(2,0)", unexplained.empty(),
                   std::to_string(exc.size()) + " tuples with count > 3, unexplained: " + list(unexplained));
    r.verdicts.add("x4.badness_at_most_1", bad_badness.empty(),
                   std::to_string(bad_badness.size()) + " violations: " + list(bad_badness));
  } else {
    r.verdicts.add("exceptions_equal_T3", same_set(exc, bad_tuples_mod3()), "exceptional tuples: " + list(exc));
    std::vector<ResidueTuple> nonzero;
    for (const ScanException& e : r.exceptions)
      if (std::any_of(e.pairs.begin() + 1, e.pairs.end(), [](CoeffPair p) { return p != CoeffPair{0, 0}; }))
        nonzero.push_back(e.tuple);
    r.verdicts.add("T3_pairs_vanish", nonzero.empty(), "tuples with a nonzero non-id pair: " + list(nonzero));
  }
  r.verdicts.data["exceptions"] = exc.size();
  return r;
}

ScanReport scan_messfor9(const ResidueTuple& rep) {
  const std::vector<ResidueTuple> reps = {ResidueTuple::make(0, 1, 0, 1, 3), ResidueTuple::make(1, 1, 1, 1, 3),
                                          ResidueTuple::make(1, 2, 1, 2, 3)};
  if (std::find(reps.begin(), reps.end(), rep) == reps.end())
    throw std::invalid_argument("representative must be (0,1,0,1), (1,1,1,1) or (1,2,1,2); got " + to_string(rep));

  ScanReport r;
  r.modulus = 9;
  r.scan = "messfor9 " + to_string(rep);
  r.verdicts.title = "divided top class count over lifts of " + to_string(rep);

  std::vector<ResidueTuple> not_divisible, too_many_low;
  for_each_tuple(3, [&](const ResidueTuple& a) {
    ++r.tuples_scanned;
    std::array<std::int64_t, 4> lift;
    for (int i = 0; i < 4; ++i) lift[i] = 3 * a.t[i] + rep.t[i];
    const ResidueTuple lifted{lift, 9};
    auto pairs = top_pairs_exact(lift[0], lift[1], lift[2], lift[3]);
    for (std::size_t s = 1; s < pairs.size(); ++s) {
      if (pairs[s].p1 % 3 != 0 || pairs[s].p2 % 3 != 0) {
        not_divisible.push_back(lifted);
        return;
      }
      pairs[s] = reduce({pairs[s].p1 / 3, pairs[s].p2 / 3}, 3);
    }
    const std::int64_t count = class_count(pairs, 3);
    const auto low = std::count_if(pairs.begin(), pairs.end(), [](CoeffPair p) { return p.p1 == 0 && p.p2 == 0; });
    if (low > 1) too_many_low.push_back(lifted);
    if (count > 3) r.exceptions.push_back({lifted, count, pairs});
  });

  std::vector<ResidueTuple> exc;
  for (const ScanException& e : r.exceptions) exc.push_back(e.tuple);
  r.verdicts.add("coefficients_divisible_by_3", not_divisible.empty(), "failing lifts: " + list(not_divisible));
  r.verdicts.add("count_at_most_3", exc.empty(), "failing lifts: " + list(exc));
  r.verdicts.add("low_order_at_most_1", too_many_low.empty(), "failing lifts: " + list(too_many_low));
  return r;
}

ScanReport scan_triple_vanishing_mod3() {
  ScanReport r;
  r.modulus = 3;
  r.scan = "triple-vanishing";
  r.verdicts.title = "vanishing top first coefficients mod 3";

  std::map<std::int64_t, std::size_t> histogram;
  std::vector<ResidueTuple> out_of_set;
  for_each_tuple(3, [&](const ResidueTuple& t) {
    ++r.tuples_scanned;
    if (!coprime3(t.t[0], t.t[2], 3) || !coprime3(t.t[1], t.t[3], 3)) return;
    const auto pairs = top_pairs(t);
    const std::int64_t count = std::count_if(pairs.begin() + 1, pairs.end(), [](CoeffPair p) { return p.p1 == 0; });
    ++histogram[count];
    if (count != 0 && count != 1 && count != 2 && count != 5) out_of_set.push_back(t);
    if (count > 2) r.exceptions.push_back({t, count, pairs});
  });

  std::vector<ResidueTuple> exc;
  for (const ScanException& e : r.exceptions) exc.push_back(e.tuple);
  r.verdicts.add("count_in_{0,1,2,5}", out_of_set.empty(), "tuples outside: " + list(out_of_set));
  r.verdicts.add("count_5_set_is_exceptional_set", same_set(exc, triple_vanishing_tuples_mod3()),
                 "tuples with count > 2: " + list(exc));
  for (const auto& [k, v] : histogram) r.verdicts.data["histogram"][std::to_string(k)] = v;
  return r;
}

std::array<std::int64_t, 4> abcd(std::int64_t u, std::int64_t v) {
  const i128 a = u, b = v;
  return {narrow(a * a + a * b + b * b), narrow(b * b - a * a), narrow(a * a + 2 * a * b), narrow(b * b + 2 * a * b)};
}

ScanReport scan_ABCD_mod9() {
  ScanReport r;
  r.modulus = 9;
  r.scan = "ABCD";
  r.verdicts.title = "A, B, C, D mod 9";

  std::vector<ResidueTuple> a_zero, several;
  for (std::int64_t u = 0; u < 9; ++u)
    for (std::int64_t v = 0; v < 9; ++v) {
      if (!coprime3(u, v, 3)) continue;
      ++r.tuples_scanned;
      const auto vals = abcd(u, v);
      const auto zeros = std::count_if(vals.begin(), vals.end(), [](std::int64_t x) { return mod_floor(x, 9) == 0; });
      const ResidueTuple uv{{u, v, 0, 0}, 9};
      if (mod_floor(vals[0], 9) == 0) a_zero.push_back(uv);
      if (zeros > 1) several.push_back(uv);
      if (zeros > 1 || mod_floor(vals[0], 9) == 0) r.exceptions.push_back({uv, zeros, {}});
    }
  r.verdicts.add("A_nonzero", a_zero.empty(), "(u,v,_,_) with A = 0: " + list(a_zero));
  r.verdicts.add("at_most_one_vanishes", several.empty(), "(u,v,_,_) with two zeros: " + list(several));
  return r;
}

std::string to_string(const ResidueTuple& t) {
  return "(" + std::to_string(t.t[0]) + "," + std::to_string(t.t[1]) + "," + std::to_string(t.t[2]) + "," +
         std::to_string(t.t[3]) + ")";
}

std::string to_string(const CoeffPair& p) { return "(" + std::to_string(p.p1) + "," + std::to_string(p.p2) + ")"; }

nlohmann::ordered_json ScanReport::to_json() const {
  nlohmann::ordered_json j;
  j["scan"] = scan;
  j["modulus"] = modulus;
  j["tuples_scanned"] = tuples_scanned;
  j["exceptions"] = nlohmann::ordered_json::array();
  for (const ScanException& e : exceptions) {
    nlohmann::ordered_json ej{{"tuple", e.tuple.t}, {"count", e.count}};
    if (scan != "ABCD") {
      ej["pairs"] = nlohmann::ordered_json::array();
      for (const CoeffPair& p : e.pairs) ej["pairs"].push_back({p.p1, p.p2});
    }
    j["exceptions"].push_back(ej);
  }
  j["verdicts"] = verdicts.to_json();
  return j;
}

std::string ScanReport::to_text() const {
  std::string out = verdicts.to_text();
  out += "  scanned " + std::to_string(tuples_scanned) + " tuples, " + std::to_string(exceptions.size()) +
         " exceptional\n";
  for (const ScanException& e : exceptions) {
    out += "    " + to_string(e.tuple) + " count=" + std::to_string(e.count);
    if (scan != "ABCD") {
      out += " pairs";
      for (const CoeffPair& p : e.pairs) out += " " + to_string(p);
    }
    out += "\n";
  }
  return out;
}

}  // namespace latcover
