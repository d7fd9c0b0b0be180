#include "latcover/groebner.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <tuple>

namespace latcover {

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (auto x : e) d += x;
  return d;
}

bool Monomial::divides(const Monomial& o) const {
  for (std::size_t i = 0; i < kVars; ++i)
    if (e[i] > o.e[i]) return false;
  return true;
}

Monomial Monomial::lcm(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kVars; ++i) r.e[i] = std::max(e[i], o.e[i]);
  return r;
}

bool Monomial::coprime(const Monomial& o) const {
  for (std::size_t i = 0; i < kVars; ++i)
    if (e[i] && o.e[i]) return false;
  return true;
}

Monomial Monomial::operator/(const Monomial& d) const {
  Monomial r;
  for (std::size_t i = 0; i < kVars; ++i) r.e[i] = static_cast<std::uint16_t>(e[i] - d.e[i]);
  return r;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kVars; ++i) {
    const unsigned s = unsigned{e[i]} + o.e[i];
    if (s > 0xffff) throw std::overflow_error("monomial exponent overflow");
    r.e[i] = static_cast<std::uint16_t>(s);
  }
  return r;
}

bool degrevlex_greater(const Monomial& a, const Monomial& b) {
  const unsigned da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  for (std::size_t i = kVars; i-- > 0;)
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
  return false;
}

PolyZ PolyZ::constant(const BigInt& c) { return monomial(c, Monomial{}); }

PolyZ PolyZ::variable(std::size_t i) {
  Monomial m;
  m.e.at(i) = 1;
  return monomial(1, m);
}

PolyZ PolyZ::monomial(const BigInt& c, const Monomial& m) {
  PolyZ p;
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

unsigned PolyZ::degree() const {
  unsigned d = 0;
  for (const Term& t : terms_) d = std::max(d, t.m.degree());
  return d;
}

namespace {

// Merge of two sorted term lists: x + sign * y.
std::vector<Term> merge(const std::vector<Term>& x, const std::vector<Term>& y, int sign) {
  std::vector<Term> out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && degrevlex_greater(x[i].m, y[j].m))) {
      out.push_back(x[i++]);
    } else if (i == x.size() || degrevlex_greater(y[j].m, x[i].m)) {
      out.push_back({y[j].m, sign > 0 ? y[j].c : BigInt(-y[j].c)});
      ++j;
    } else {
      BigInt c = sign > 0 ? BigInt(x[i].c + y[j].c) : BigInt(x[i].c - y[j].c);
      if (c != 0) out.push_back({x[i].m, std::move(c)});
      ++i, ++j;
    }
  }
  return out;
}

}  // namespace

PolyZ PolyZ::operator+(const PolyZ& o) const {
  PolyZ r;
  r.terms_ = merge(terms_, o.terms_, 1);
  return r;
}

PolyZ PolyZ::operator-(const PolyZ& o) const {
  PolyZ r;
  r.terms_ = merge(terms_, o.terms_, -1);
  return r;
}

PolyZ PolyZ::operator-() const {
  PolyZ r = *this;
  for (Term& t : r.terms_) t.c = -t.c;
  return r;
}

PolyZ PolyZ::scaled(const BigInt& c, const Monomial& m) const {
  PolyZ r;
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves the order.
  for (const Term& t : terms_) r.terms_.push_back({t.m * m, BigInt(t.c * c)});
  return r;
}

PolyZ PolyZ::minus_multiple(const BigInt& c, const Monomial& m, const PolyZ& g) const {
  return *this - g.scaled(c, m);
}

PolyZ PolyZ::operator*(const PolyZ& o) const {
  PolyZ r;
  for (const Term& t : o.terms_) r = r + scaled(t.c, t.m);
  return r;
}

PolyZ operator*(long c, const PolyZ& p) { return p.scaled(BigInt(c), Monomial{}); }

BigInt evaluate(const PolyZ& p, std::span<const std::int64_t> point) {
  if (point.size() != kVars) throw std::invalid_argument("evaluate needs 8 coordinates");
  BigInt sum = 0;
  for (const Term& t : p.terms()) {
    BigInt v = t.c;
    for (std::size_t i = 0; i < kVars; ++i)
      for (unsigned k = 0; k < t.m.e[i]; ++k) v *= BigInt(static_cast<long>(point[i]));
    sum += v;
  }
  return sum;
}

std::string to_string(const PolyZ& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const Term& t : p.terms()) {
    BigInt c = t.c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    c = abs(c);
    std::string mono;
    for (std::size_t i = 0; i < kVars; ++i) {
      if (!t.m.e[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += kVarNames[i];
      if (t.m.e[i] > 1) mono += "^" + std::to_string(t.m.e[i]);
    }
    if (mono.empty()) {
      out += c.get_str();
    } else {
      if (c != 1) out += c.get_str() + "*";
      out += mono;
    }
  }
  return out;
}

namespace {

// Floor quotient so that the remainder c - q * d lies in [0, |d|).
BigInt euclid_quotient(const BigInt& c, const BigInt& d) {
  BigInt q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
  if (r < 0) {  // only possible for d < 0
    r -= d;
    q += 1;
  }
  return q;
}

// One reduction attempt of term t by the basis; returns the basis position
// and quotient of the first g that changes the coefficient.
bool find_reducer(const Term& t, std::span<const PolyZ> basis, std::size_t& which, BigInt& q) {
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const Term& l = basis[k].lead();
    if (!l.m.divides(t.m)) continue;
    BigInt quot = euclid_quotient(t.c, l.c);
    if (quot != 0) {
      which = k;
      q = std::move(quot);
      return true;
    }
  }
  return false;
}

}  // namespace

PolyZ normal_form(const PolyZ& f, std::span<const PolyZ> basis) {
  std::vector<Term> rem;
  PolyZ p = f;
  while (!p.is_zero()) {
    const Term lead = p.lead();
    std::size_t k = 0;
    BigInt q;
    if (find_reducer(lead, basis, k, q)) {
      p = p.minus_multiple(q, lead.m / basis[k].lead().m, basis[k]);
    } else {
      rem.push_back(lead);
      p = p - PolyZ::monomial(lead.c, lead.m);
    }
  }
  PolyZ out;
  for (const Term& t : rem) out = out + PolyZ::monomial(t.c, t.m);
  return out;
}

namespace {

PolyZ positive(PolyZ p) { return (!p.is_zero() && p.lead().c < 0) ? -p : p; }

bool strongly_divides(const Term& a, const Term& b) {
  return a.m.divides(b.m) && mpz_divisible_p(b.c.get_mpz_t(), a.c.get_mpz_t()) != 0;
}

struct Pair {
  unsigned degree;
  std::size_t serial;
  std::size_t i, j;
  bool operator>(const Pair& o) const { return std::tie(degree, serial) > std::tie(o.degree, o.serial); }
};

}  // namespace

IdealBasis strong_groebner(const IdealBasis& generators, const GroebnerLimits& limits) {
  IdealBasis g;
  std::priority_queue<Pair, std::vector<Pair>, std::greater<>> pairs;
  std::size_t serial = 0, processed = 0;

  const auto add = [&](PolyZ h) {
    h = positive(std::move(h));
    if (g.size() >= limits.max_basis) throw GroebnerLimitExceeded("basis size limit reached");
    for (std::size_t k = 0; k < g.size(); ++k)
      pairs.push({g[k].lead().m.lcm(h.lead().m).degree(), serial++, k, g.size()});
    g.push_back(std::move(h));
  };

  for (const PolyZ& f : generators) {
    PolyZ h = normal_form(f, g);
    if (!h.is_zero()) add(std::move(h));
  }

  while (!pairs.empty()) {
    if (++processed > limits.max_pairs) throw GroebnerLimitExceeded("pair limit reached");
    const Pair pr = pairs.top();
    pairs.pop();
    const PolyZ& f = g[pr.i];
    const PolyZ& h = g[pr.j];
    const Term &lf = f.lead(), &lh = h.lead();
    const Monomial m = lf.m.lcm(lh.m);
    const Monomial mf = m / lf.m, mh = m / lh.m;

    std::vector<PolyZ> candidates;
    BigInt gcd_c, s, t;
    mpz_gcdext(gcd_c.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), lf.c.get_mpz_t(), lh.c.get_mpz_t());
    const bool one_divides = gcd_c == lf.c || gcd_c == lh.c;
    // Both leading terms coprime: the S-polynomial reduces to zero.
    if (!(lf.m.coprime(lh.m) && gcd_c == 1)) {
      BigInt l = lf.c / gcd_c * lh.c;
      candidates.push_back(f.scaled(BigInt(l / lf.c), mf) - h.scaled(BigInt(l / lh.c), mh));
    }
    // GCD-polynomial; redundant when one leading coefficient divides the other.
    if (!one_divides) candidates.push_back(f.scaled(s, mf) + h.scaled(t, mh));

    for (const PolyZ& c : candidates) {
      PolyZ r = normal_form(c, g);
      if (!r.is_zero()) add(std::move(r));
    }
  }

  // Drop elements whose leading term is strongly divisible by another's.
  IdealBasis out;
  for (std::size_t k = 0; k < g.size(); ++k) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (j == k || !strongly_divides(g[j].lead(), g[k].lead())) continue;
      // Equal leading terms: keep the earliest.
      redundant = !strongly_divides(g[k].lead(), g[j].lead()) || j < k;
    }
    if (!redundant) out.push_back(g[k]);
  }
  return out;
}

bool contains_constant(const IdealBasis& generators, const BigInt& c, const GroebnerLimits& limits) {
  if (c == 0) throw std::invalid_argument("contains_constant needs a nonzero constant");
  const IdealBasis gb = strong_groebner(generators, limits);
  return normal_form(PolyZ::constant(c), gb).is_zero();
}

namespace {

PolyZ v(std::size_t i) { return PolyZ::variable(i); }

const std::map<std::string, PolyZ>& named_polynomials() {
  static const std::map<std::string, PolyZ> table = [] {
    const PolyZ t1 = v(0), t2 = v(1), t3 = v(2), t4 = v(3), u1 = v(4), u2 = v(5), u3 = v(6), u4 = v(7);
    const PolyZ one = PolyZ::constant(1);
    std::map<std::string, PolyZ> m;
    m["R1"] = t1 * t2 + t2 * t3 + t3 * t4;
    m["R2"] = t2 * t2 + t2 * t4 + t4 * t4;
    m["Rsquared1"] = t1 * t2 + t1 * t4 + t3 * t4;
    m["Rsquared2"] = t2 * t2 + t2 * t4 + t4 * t4;
    m["S1"] = t3 * t4 - t1 * t2;
    m["S2"] = t4 * t4 - t2 * t2;
    m["RS1"] = t1 * t2 + t1 * t4 + t2 * t3;
    m["RS2"] = t2 * t2 + 2 * (t2 * t4);
    m["RsquaredS1"] = t1 * t4 + t2 * t3 + t3 * t4;
    m["RsquaredS2"] = t4 * t4 + 2 * (t2 * t4);
    m["coprimet2t4"] = u2 * t2 + u4 * t4 - one;
    m["coprimet1t3"] = u1 * t1 + u3 * t3 - one;
    m["coprime"] = u1 * t1 + u2 * t2 + u3 * t3 + u4 * t4 - one;
    m["botR"] = t1 * t1 + t1 * t3 + t3 * t3;
    m["botRsquared"] = t1 * t1 + t1 * t3 + t3 * t3;
    m["botS"] = t1 * t1 - t3 * t3;
    m["botRS"] = t1 * t1 + 2 * (t1 * t3);
    m["botRsquaredS"] = t3 * t3 + 2 * (t1 * t3);
    // Extra members of the nine-generator (R^2, S) system.
    m["S1neg"] = t1 * t2 - t3 * t4;
    return m;
  }();
  return table;
}

LemmaSystem make_system(std::string name, std::string family, std::vector<std::string> gens, bool expect) {
  LemmaSystem s{std::move(name), std::move(family), std::move(gens), {}, expect};
  for (const std::string& n : s.generator_names) s.generators.push_back(lemma_polynomial(n));
  return s;
}

}  // namespace

PolyZ lemma_polynomial(const std::string& name) {
  const auto& t = named_polynomials();
  auto it = t.find(name);
  if (it == t.end()) throw std::invalid_argument("unknown lemma polynomial " + name);
  return it->second;
}

LemmaSystem pair_R2_S_short() {
  return make_system("pair(R2,S) seven-generator form", "pair",
                     {"Rsquared1", "Rsquared2", "S1", "S2", "botRsquared", "botS", "coprime"}, true);
}

std::vector<LemmaSystem> lemma_systems() {
  struct Sigma {
    const char* label;
    const char* stem;
  };
  const Sigma sig[] = {{"R", "R"}, {"R2", "Rsquared"}, {"S", "S"}, {"RS", "RS"}, {"R2S", "RsquaredS"}};
  std::vector<LemmaSystem> out;

  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b) {
      const std::string name = std::string("pair(") + sig[a].label + "," + sig[b].label + ")";
      if (a == 1 && b == 2) {
        // All defining polynomials of both equations plus the full witness.
        out.push_back(make_system(name, "pair",
                                  {"Rsquared1", "Rsquared2", "botRsquared", "R1", "S1", "S2", "botS", "S1neg",
                                   "coprime"},
                                  true));
        continue;
      }
      const std::string sa = sig[a].stem, sb = sig[b].stem;
      out.push_back(make_system(name, "pair",
                                {sa + "1", sa + "2", sb + "1", sb + "2", "bot" + sa, "bot" + sb, "coprime"},
                                !(a == 0 && b == 1)));
    }

  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b)
      for (int c = b + 1; c < 5; ++c) {
        const std::string name =
            std::string("triple(") + sig[a].label + "," + sig[b].label + "," + sig[c].label + ")";
        out.push_back(make_system(name, "triple",
                                  {std::string(sig[a].stem) + "1", std::string(sig[b].stem) + "1",
                                   std::string(sig[c].stem) + "1", "coprimet1t3", "coprimet2t4"},
                                  !(a == 2 && b == 3 && c == 4)));
      }
  return out;
}

Report verify_groebner_lemmas(const GroebnerLimits& limits) {
  Report r;
  r.title = "ideal membership of 3";
  for (const LemmaSystem& s : lemma_systems()) {
    const IdealBasis gb = strong_groebner(s.generators, limits);
    const bool has3 = normal_form(PolyZ::constant(3), gb).is_zero();
    std::string detail = std::string("3 ") + (has3 ? "in" : "not in") + " ideal (expected " +
                         (s.expect_contains_3 ? "in" : "not in") + "), basis size " + std::to_string(gb.size());
    bool ok = has3 == s.expect_contains_3;
    if (!s.expect_contains_3 && s.family == "triple") {
      const bool member = normal_form(lemma_polynomial("botR"), gb).is_zero();
      detail += member ? "; t1^2+t1*t3+t3^2 in ideal" : "; t1^2+t1*t3+t3^2 NOT in ideal";
      ok = ok && member;
    }
    r.add(s.name, ok, detail);
  }
  return r;
}

}  // namespace latcover
