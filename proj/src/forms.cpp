#include "latcover/forms.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace latcover {

BinaryForm::BinaryForm(std::vector<Rat> coefficients) : c_(std::move(coefficients)) {
  if (c_.size() < 4) throw std::invalid_argument("binary forms here have degree at least 3");
  if (std::all_of(c_.begin(), c_.end(), [](const Rat& q) { return q == 0; }))
    throw std::invalid_argument("binary form is identically zero");
}

bool BinaryForm::is_integral() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rat& q) { return is_integer(q); });
}

BinaryForm parse_form(std::string_view text) {
  std::vector<Rat> cs;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    cs.push_back(parse_rat(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return BinaryForm(std::move(cs));
}

std::string to_string(const BinaryForm& f) {
  std::string s;
  for (const Rat& q : f.coefficients()) s += (s.empty() ? "" : ",") + to_string(q);
  return s;
}

Rat evaluate(const BinaryForm& f, const Rat& x, const Rat& y) {
  // Homogeneous Horner: ((c0 x + c1 y) x + c2 y^2) ...
  const auto& c = f.coefficients();
  Rat acc = 0, ypow = 1;
  for (std::size_t i = 0; i < c.size(); ++i) {
    acc = acc * x + c[i] * ypow;
    ypow *= y;
  }
  return acc;
}

namespace {

// Coefficient lists of forms in (X, Y), highest X power first.
using Coeffs = std::vector<Rat>;

Coeffs mul(const Coeffs& p, const Coeffs& q) {
  Coeffs r(p.size() + q.size() - 1, Rat(0));
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) r[i + j] += p[i] * q[j];
  return r;
}

Coeffs power(const Coeffs& p, std::size_t k) {
  Coeffs r{Rat(1)};
  for (std::size_t i = 0; i < k; ++i) r = mul(r, p);
  return r;
}

}  // namespace

BinaryForm compose(const BinaryForm& f, const RatMat2& g) {
  const std::size_t d = f.degree();
  const Coeffs first{g.a, g.b}, second{g.c, g.d};
  Coeffs out(d + 1, Rat(0));
  for (std::size_t i = 0; i <= d; ++i) {
    if (f.coefficients()[i] == 0) continue;
    const Coeffs term = mul(power(first, d - i), power(second, i));
    for (std::size_t k = 0; k <= d; ++k) out[k] += f.coefficients()[i] * term[k];
  }
  if (std::all_of(out.begin(), out.end(), [](const Rat& q) { return q == 0; }))
    throw std::domain_error("composition with a singular matrix annihilated the form");
  return BinaryForm(std::move(out));
}

BinaryForm scale(const BinaryForm& f, const Rat& k) {
  Coeffs c = f.coefficients();
  for (Rat& q : c) q *= k;
  return BinaryForm(std::move(c));
}

bool is_automorphism(const BinaryForm& f, const RatMat2& gamma) {
  if (gamma.det() == 0) throw std::domain_error("automorphism test needs an invertible matrix");
  return compose(f, gamma) == f;
}

RatMat2 matrix_S() { return {Rat(0), Rat(1), Rat(1), Rat(0)}; }
RatMat2 matrix_R() { return {Rat(0), Rat(1), Rat(-1), Rat(-1)}; }

const DihedralGroups& dihedral_groups() {
  static const DihedralGroups groups = [] {
    DihedralGroups g;
    const RatMat2 r = matrix_R(), s = matrix_S(), r2 = r * r;
    const std::pair<const char*, RatMat2> base[] = {
        {"id", RatMat2::identity()}, {"R", r}, {"R2", r2}, {"S", s}, {"SR", s * r}, {"SR2", s * r2}};
    for (const auto& [name, m] : base) g.d3.push_back({name, m, m.order()});
    g.d6 = g.d3;
    for (const auto& [name, m] : base) {
      const RatMat2 neg = -m;
      g.d6.push_back({std::string("-") + name, neg, neg.order()});
    }
    return g;
  }();
  return groups;
}

GroupElement conjugate(const RatMat2& t, const GroupElement& g) {
  const RatMat2 m = t.inverse() * g.matrix * t;
  return {"T^-1 " + g.name + " T", m, m.order()};
}

std::string to_string(CorollaryCase c) {
  switch (c) {
    case CorollaryCase::A: return "a";
    case CorollaryCase::B: return "b";
    case CorollaryCase::C: return "c";
    case CorollaryCase::D: return "d";
    case CorollaryCase::None: return "none";
  }
  return "none";
}

CorollaryCase corollary_case(const RatMat2& s) {
  const bool ad = is_integer(s.a) && is_integer(s.d);
  if (ad && is_integer(s.b) && is_integer(s.c)) return CorollaryCase::A;
  if (ad && is_integer(s.b) && is_half_odd(s.c)) return CorollaryCase::B;
  if (ad && is_half_odd(s.b) && is_integer(s.c)) return CorollaryCase::C;
  if (is_half_odd(s.a) && is_half_odd(s.b) && is_half_odd(s.c) && is_half_odd(s.d)) return CorollaryCase::D;
  return CorollaryCase::None;
}

ExtraordinaryVerdict extraordinary_by_C3(const BinaryForm& f, const RatMat2& t, Variant variant) {
  const auto& groups = dihedral_groups();
  const auto& group = variant == Variant::D3 ? groups.d3 : groups.d6;
  ExtraordinaryVerdict v;
  for (const GroupElement& g : group) {
    const GroupElement c = conjugate(t, g);
    if (!is_automorphism(f, c.matrix))
      throw AutomorphismMismatch("supplied conjugation is wrong: " + to_string(c.matrix) + " (from " + g.name +
                                 ") is not an automorphism of the form");
    if (c.order != 3) continue;
    const CorollaryCase k = corollary_case(c.matrix);
    v.order3.push_back(c);
    v.cases.push_back(k);
    if (k != CorollaryCase::None) v.extraordinary = true;
  }
  return v;
}

BinaryForm dagger(const BinaryForm& f) {
  Coeffs c = f.coefficients();
  const std::size_t d = f.degree();
  for (std::size_t i = 0; i <= d; ++i) {
    Rat factor = 1;
    for (std::size_t k = 0; k < d - i; ++k) factor *= 2;
    c[i] *= factor;
  }
  return BinaryForm(std::move(c));
}

Rat resultant(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  const std::size_t m = a.size() - 1, n = b.size() - 1, size = m + n;
  if (size == 0) return 1;
  std::vector<std::vector<Rat>> s(size, std::vector<Rat>(size, Rat(0)));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k <= m; ++k) s[r][r + k] = a[k];
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t k = 0; k <= n; ++k) s[n + r][r + k] = b[k];

  Rat det = 1;
  for (std::size_t col = 0; col < size; ++col) {
    std::size_t piv = col;
    while (piv < size && s[piv][col] == 0) ++piv;
    if (piv == size) return 0;
    if (piv != col) {
      std::swap(s[piv], s[col]);
      det = -det;
    }
    det *= s[col][col];
    for (std::size_t r = col + 1; r < size; ++r) {
      if (s[r][col] == 0) continue;
      const Rat f = s[r][col] / s[col][col];
      for (std::size_t k = col; k < size; ++k) s[r][k] -= f * s[col][k];
    }
  }
  return det;
}

Rat discriminant(const BinaryForm& f) {
  const std::size_t d = f.degree();
  const auto& c = f.coefficients();
  std::vector<Rat> fx(d), fy(d);
  for (std::size_t i = 0; i < d; ++i) {
    fx[i] = c[i] * static_cast<unsigned long>(d - i);
    fy[i] = c[i + 1] * static_cast<unsigned long>(i + 1);
  }
  Rat norm = 1;
  for (std::size_t k = 0; k + 3 <= d; ++k) norm *= static_cast<unsigned long>(d);
  Rat disc = resultant(fx, fy) / norm;
  if ((d * (d - 1) / 2) % 2 == 1) disc = -disc;
  return disc;
}

BinaryForm sextic(std::int64_t a, std::int64_t c) {
  const Rat ra(static_cast<long>(a)), rc(static_cast<long>(c));
  BinaryForm f({ra, -3 * ra, rc, 5 * ra - 2 * rc, rc, -3 * ra, ra});
  if (discriminant(f) == 0)
    throw std::invalid_argument("F_{a,c} has zero discriminant for a=" + std::to_string(a) + ", c=" + std::to_string(c));
  return f;
}

BinaryForm form_F0() { return BinaryForm({Rat(0), Rat(1), Rat(1), Rat(0)}); }

RatMat2 sextic_conjugator() { return RatMat2::diag(Rat(1), Rat(-1)); }

namespace {

BigInt eval_int(const BinaryForm& f, std::int64_t x, std::int64_t y) {
  const Rat v = evaluate(f, Rat(static_cast<long>(x)), Rat(static_cast<long>(y)));
  return v.get_num();
}

// First point (in scan order) of the box where each value is attained.
std::map<BigInt, Vec2Z> values_on_box(const BinaryForm& f, std::int64_t r) {
  std::map<BigInt, Vec2Z> out;
  for (std::int64_t x = -r; x <= r; ++x)
    for (std::int64_t y = -r; y <= r; ++y) out.emplace(eval_int(f, x, y), Vec2Z{x, y});
  return out;
}

std::vector<ValueWitness> missing(const std::map<BigInt, Vec2Z>& small, const std::map<BigInt, Vec2Z>& large) {
  std::vector<ValueWitness> out;
  for (const auto& [value, point] : small)
    if (!large.contains(value)) out.push_back({value, point});
  return out;
}

std::string sample(const std::vector<ValueWitness>& ws) {
  std::string s;
  for (std::size_t i = 0; i < ws.size() && i < 5; ++i)
    s += (s.empty() ? "" : ", ") + ws[i].value.get_str() + " at (" + std::to_string(ws[i].point.x) + "," +
         std::to_string(ws[i].point.y) + ")";
  return s;
}

}  // namespace

ValueComparison cross_value_check(const BinaryForm& f, const BinaryForm& g, std::int64_t n,
                                  std::optional<std::int64_t> m) {
  if (!f.is_integral() || !g.is_integral()) throw std::invalid_argument("value comparison needs integral forms");
  if (n < 0) throw std::invalid_argument("box radius must be nonnegative");
  const std::int64_t big = m.value_or(6 * n);
  if (big < n) throw std::invalid_argument("search box must contain the value box");

  ValueComparison out;
  const auto f_small = values_on_box(f, n), g_small = values_on_box(g, n);
  const auto f_big = values_on_box(f, big), g_big = values_on_box(g, big);
  out.g_values_missing_from_f = missing(g_small, f_big);
  out.f_values_missing_from_g = missing(f_small, g_big);

  Report& r = out.report;
  r.title = "value sets on boxes N=" + std::to_string(n) + ", M=" + std::to_string(big);
  r.add("G values taken by F", out.g_values_missing_from_f.empty(),
        std::to_string(g_small.size()) + " distinct values, " + std::to_string(out.g_values_missing_from_f.size()) +
            " unmatched" + (out.g_values_missing_from_f.empty() ? "" : ": " + sample(out.g_values_missing_from_f)));
  r.add("F values taken by G", out.f_values_missing_from_g.empty(),
        std::to_string(f_small.size()) + " distinct values, " + std::to_string(out.f_values_missing_from_g.size()) +
            " unmatched" + (out.f_values_missing_from_g.empty() ? "" : ": " + sample(out.f_values_missing_from_g)));
  return out;
}

}  // namespace latcover
