#include "latcover/lattice.hpp"

#include <charconv>
#include <stdexcept>
#include <string>

#include "latcover/checked.hpp"

namespace latcover {

namespace {

using i128 = __int128;

std::int64_t narrow(i128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("lattice coordinate exceeds int64");
  return static_cast<std::int64_t>(v);
}

std::int64_t abs64(std::int64_t v) { return v < 0 ? checked_sub(0, v) : v; }

std::int64_t to_int64(const BigInt& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("integer does not fit in int64");
  return z.get_si();
}

// Lattice of solutions of  alpha*x + beta*y == 0 (mod delta), delta >= 1.
Subgroup congruence_lattice(BigInt alpha, BigInt beta, BigInt delta) {
  BigInt g0 = gcd(gcd(alpha, beta), delta);
  alpha /= g0;
  beta /= g0;
  delta /= g0;
  if (delta == 1) return Subgroup::full();
  BigInt g = gcd(alpha, delta);
  BigInt modulus = delta / g;
  BigInt c = 0;
  if (modulus > 1) {
    BigInt unit = alpha / g;
    BigInt inv;
    mpz_invert(inv.get_mpz_t(), unit.get_mpz_t(), modulus.get_mpz_t());
    c = -beta * inv;
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), modulus.get_mpz_t());
  }
  return Subgroup::hermite(to_int64(modulus), to_int64(c), to_int64(g));
}

}  // namespace

Subgroup Subgroup::hermite(std::int64_t a, std::int64_t c, std::int64_t b) {
  if (a < 1 || b < 1) throw std::invalid_argument("hermite basis needs a >= 1 and b >= 1");
  return Subgroup(2, a, mod_floor(c, a), b);
}

Subgroup Subgroup::from_columns(std::int64_t u1, std::int64_t v1, std::int64_t u2, std::int64_t v2) {
  return canonicalize({Vec2Z{u1, u2}, Vec2Z{v1, v2}});
}

std::vector<Vec2Z> Subgroup::basis() const {
  switch (rank_) {
    case 0:
      return {};
    case 1:
      return {Vec2Z{a_, b_}};
    default:
      return {Vec2Z{a_, 0}, Vec2Z{c_, b_}};
  }
}

Subgroup canonicalize(std::span<const Vec2Z> gens) {
  std::int64_t axis = 0;  // generator of S ∩ (Z x {0}) found so far
  Vec2Z pivot{0, 0};      // element with the smallest positive y found so far

  auto absorb_axis = [&](std::int64_t x) {
    axis = gcd64(axis, abs64(x));
    if (axis > 0 && pivot.y != 0) pivot.x = mod_floor(pivot.x, axis);
  };

  for (const Vec2Z& v : gens) {
    if (v.y == 0) {
      absorb_axis(v.x);
      continue;
    }
    if (pivot.y == 0) {
      pivot = v.y < 0 ? Vec2Z{checked_sub(0, v.x), checked_sub(0, v.y)} : v;
      if (axis > 0) pivot.x = mod_floor(pivot.x, axis);
      continue;
    }
    ExtGcd e = ext_gcd(pivot.y, v.y);
    i128 new_x = static_cast<i128>(e.s) * pivot.x + static_cast<i128>(e.t) * v.x;
    i128 residual = static_cast<i128>(v.y / e.g) * pivot.x - static_cast<i128>(pivot.y / e.g) * v.x;
    absorb_axis(narrow(residual));
    if (axis > 0) new_x %= axis;
    pivot = Vec2Z{narrow(new_x), e.g};
    if (axis > 0) pivot.x = mod_floor(pivot.x, axis);
  }

  if (pivot.y == 0) {
    if (axis == 0) return Subgroup();
    return Subgroup(1, axis, 0, 0);
  }
  if (axis == 0) return Subgroup(1, pivot.x, 0, pivot.y);
  return Subgroup(2, axis, mod_floor(pivot.x, axis), pivot.y);
}

SubgroupIndex index(const Subgroup& s) {
  if (s.rank() < 2) return std::nullopt;
  return checked_mul(s.a(), s.b());
}

bool contains(const Subgroup& s, Vec2Z v) {
  switch (s.rank()) {
    case 0:
      return v.x == 0 && v.y == 0;
    case 1: {
      Vec2Z g = s.generator();
      i128 cross = static_cast<i128>(g.x) * v.y - static_cast<i128>(g.y) * v.x;
      if (cross != 0) return false;
      return g.y != 0 ? v.y % g.y == 0 : v.x % g.x == 0;
    }
    default: {
      if (v.y % s.b() != 0) return false;
      i128 k = v.y / s.b();
      i128 rest = static_cast<i128>(v.x) - k * s.c();
      return rest % s.a() == 0;
    }
  }
}

namespace {

Subgroup intersect_rank2(const Subgroup& p, const Subgroup& q) {
  const std::int64_t a1 = p.a(), c1 = p.c(), b1 = p.b();
  const std::int64_t a2 = q.a(), c2 = q.c(), b2 = q.b();
  const std::int64_t l = lcm64(b1, b2);
  const std::int64_t g = gcd64(a1, a2);
  // At height y = l*t the admissible x are t*alpha mod a1 and t*beta mod a2.
  const std::int64_t alpha = narrow(static_cast<i128>(mod_floor(l / b1, a1)) * c1 % a1);
  const std::int64_t beta = narrow(static_cast<i128>(mod_floor(l / b2, a2)) * c2 % a2);
  const std::int64_t diff = mod_floor(alpha - beta, g);
  const std::int64_t t0 = g / gcd64(g, diff);
  const std::int64_t b = checked_mul(l, t0);
  const std::int64_t r1 = narrow(static_cast<i128>(t0) * alpha % a1);
  const std::int64_t r2 = narrow(static_cast<i128>(t0) * beta % a2);
  // CRT: x == r1 (a1), x == r2 (a2); solvable since g | r2 - r1.
  const std::int64_t a = lcm64(a1, a2);
  const std::int64_t m2 = a2 / g;
  std::int64_t x = r1;
  if (m2 > 1) {
    std::int64_t k = narrow(static_cast<i128>((r2 - r1) / g) % m2 * mod_inverse(a1 / g, m2) % m2);
    x = narrow(static_cast<i128>(r1) + static_cast<i128>(a1) * mod_floor(k, m2));
  }
  return Subgroup::hermite(a, x, b);
}

// Smallest positive multiple k*w lying in q (rank 2); k divides index(q).
Subgroup intersect_line_rank2(Vec2Z w, const Subgroup& q) {
  const std::int64_t n = *index(q);
  for (std::int64_t k = 1; k <= n; ++k) {
    if (n % k != 0) continue;
    Vec2Z kw{checked_mul(k, w.x), checked_mul(k, w.y)};
    if (contains(q, kw)) return canonicalize({kw});
  }
  throw std::logic_error("intersect: index multiple not contained");  // unreachable
}

}  // namespace

Subgroup intersect(const Subgroup& p, const Subgroup& q) {
  if (p.rank() == 0 || q.rank() == 0) return Subgroup::zero();
  if (p.rank() == 2 && q.rank() == 2) return intersect_rank2(p, q);
  if (p.rank() == 1 && q.rank() == 2) return intersect_line_rank2(p.generator(), q);
  if (p.rank() == 2 && q.rank() == 1) return intersect_line_rank2(q.generator(), p);
  Vec2Z w1 = p.generator(), w2 = q.generator();
  if (static_cast<i128>(w1.x) * w2.y != static_cast<i128>(w1.y) * w2.x) return Subgroup::zero();
  const std::int64_t m1 = gcd64(abs64(w1.x), abs64(w1.y));
  const std::int64_t m2 = gcd64(abs64(w2.x), abs64(w2.y));
  const std::int64_t m = lcm64(m1, m2);
  return canonicalize({Vec2Z{checked_mul(w1.x / m1, m), checked_mul(w1.y / m1, m)}});
}

Subgroup adjoin(const Subgroup& s, Vec2Z v) {
  std::vector<Vec2Z> gens = s.basis();
  gens.push_back(v);
  return canonicalize(gens);
}

bool is_subgroup_of(const Subgroup& a, const Subgroup& b) {
  for (const Vec2Z& g : a.basis()) {
    if (!contains(b, g)) return false;
  }
  return true;
}

std::vector<Vec2Z> fundamental_domain(const Subgroup& w) {
  if (w.rank() < 2) throw std::domain_error("fundamental domain of a rank-deficient subgroup is infinite");
  std::vector<Vec2Z> out;
  out.reserve(static_cast<std::size_t>(*index(w)));
  for (std::int64_t i = 0; i < w.a(); ++i)
    for (std::int64_t j = 0; j < w.b(); ++j) out.push_back({i, j});
  return out;
}

bool is_cover(std::span<const Subgroup> lattices) {
  std::vector<const Subgroup*> members;
  members.reserve(lattices.size());
  for (const Subgroup& l : lattices) {
    if (l.rank() != 2) continue;
    if (l.is_full()) return true;
    members.push_back(&l);
  }
  if (members.empty()) return false;

  Subgroup w = *members.front();
  for (std::size_t i = 1; i < members.size(); ++i) w = intersect(w, *members[i]);

  for (std::int64_t i = 0; i < w.a(); ++i) {
    for (std::int64_t j = 0; j < w.b(); ++j) {
      const Vec2Z v{i, j};
      bool covered = false;
      for (const Subgroup* l : members) {
        if (contains(*l, v)) {
          covered = true;
          break;
        }
      }
      if (!covered) return false;
    }
  }
  return true;
}

bool is_cover_by_density(std::span<const Subgroup> lattices) {
  std::vector<Subgroup> members;
  for (const Subgroup& l : lattices)
    if (l.rank() == 2) members.push_back(l);
  if (members.empty()) return false;
  if (members.size() > 20) throw std::invalid_argument("is_cover_by_density: too many members");
  const std::size_t n = members.size();
  std::vector<Subgroup> meet(std::size_t{1} << n);
  Rat density = 0;
  for (std::size_t mask = 1; mask < meet.size(); ++mask) {
    const std::size_t low = static_cast<std::size_t>(__builtin_ctzll(mask));
    const std::size_t rest = mask & (mask - 1);
    meet[mask] = rest == 0 ? members[low] : intersect(meet[rest], members[low]);
    Rat term(1, static_cast<unsigned long>(*index(meet[mask])));
    if (__builtin_popcountll(mask) % 2 == 1) {
      density += term;
    } else {
      density -= term;
    }
  }
  return density == 1;
}

Subgroup lattice_of(const RatMat2& gamma) {
  if (gamma.det() == 0) throw std::domain_error("lattice_of: singular matrix");
  auto row_lattice = [](const Rat& p, const Rat& q) {
    BigInt delta = lcm(p.get_den(), q.get_den());
    BigInt alpha = p.get_num() * (delta / p.get_den());
    BigInt beta = q.get_num() * (delta / q.get_den());
    return congruence_lattice(alpha, beta, delta);
  };
  return intersect(row_lattice(gamma.a, gamma.b), row_lattice(gamma.c, gamma.d));
}

Rat density_sum(std::span<const Subgroup> lattices) {
  Rat sum = 0;
  for (const Subgroup& l : lattices) {
    SubgroupIndex n = index(l);
    if (!n) throw std::domain_error("density_sum: member of rank < 2");
    sum += Rat(1, static_cast<unsigned long>(*n));
  }
  return sum;
}

std::vector<Subgroup> prime_index_sublattices(const Subgroup& s, std::int64_t q) {
  if (s.rank() != 2) throw std::domain_error("prime_index_sublattices: rank < 2");
  const Vec2Z g1{s.a(), 0}, g2{s.c(), s.b()};
  auto image = [&](std::int64_t x, std::int64_t y) {
    return Vec2Z{checked_add(checked_mul(x, g1.x), checked_mul(y, g2.x)),
                 checked_add(checked_mul(x, g1.y), checked_mul(y, g2.y))};
  };
  std::vector<Subgroup> out;
  for (std::int64_t k = 0; k < q; ++k) out.push_back(canonicalize({image(q, 0), image(k, 1)}));
  out.push_back(canonicalize({image(1, 0), image(0, q)}));
  return out;
}

std::string to_string(const Subgroup& s) {
  switch (s.rank()) {
    case 0:
      return "0";
    case 1:
      return std::to_string(s.generator().x) + "," + std::to_string(s.generator().y);
    default:
      return std::to_string(s.a()) + ",0;" + std::to_string(s.c()) + "," + std::to_string(s.b());
  }
}

namespace {

std::int64_t parse_int(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
    throw std::invalid_argument("malformed integer '" + std::string(text) + "'");
  return v;
}

std::pair<std::int64_t, std::int64_t> parse_pair(std::string_view text) {
  auto comma = text.find(',');
  if (comma == std::string_view::npos) throw std::invalid_argument("expected 'x,y' in '" + std::string(text) + "'");
  return {parse_int(text.substr(0, comma)), parse_int(text.substr(comma + 1))};
}

}  // namespace

Subgroup parse_subgroup(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text == "0") return Subgroup::zero();
  auto semi = text.find(';');
  if (semi == std::string_view::npos) {
    auto [u, v] = parse_pair(text);
    Subgroup s = canonicalize({Vec2Z{u, v}});
    if (s.rank() != 1 || s.generator() != Vec2Z{u, v})
      throw std::invalid_argument("rank-1 subgroup not in canonical form: '" + std::string(text) + "'");
    return s;
  }
  auto [a, zero] = parse_pair(text.substr(0, semi));
  auto [c, b] = parse_pair(text.substr(semi + 1));
  if (zero != 0 || a < 1 || b < 1 || c < 0 || c >= a)
    throw std::invalid_argument("rank-2 subgroup not in canonical form 'a,0;c,b': '" + std::string(text) + "'");
  return Subgroup::hermite(a, c, b);
}

}  // namespace latcover
