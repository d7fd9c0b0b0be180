#include <doctest.h>

#include <algorithm>
#include <random>

#include "latcover/catalog.hpp"
#include "latcover/covering.hpp"
#include "latcover/forms.hpp"

using namespace latcover;

namespace {

struct IntMat {
  std::int64_t a, b, c, d;
};

Vec2Z apply(const IntMat& u, Vec2Z v) { return {u.a * v.x + u.b * v.y, u.c * v.x + u.d * v.y}; }

Subgroup image(const IntMat& u, const Subgroup& s) {
  std::vector<Vec2Z> gens;
  for (Vec2Z g : s.basis()) gens.push_back(apply(u, g));
  return canonicalize(gens);
}

const Catalog& catalog() {
  static const Catalog c = generate_catalog(1);
  return c;
}

}  // namespace

TEST_CASE("the catalog is closed under unimodular changes of basis") {
  // A unimodular image of a minimal covering is a minimal covering.
  const IntMat gens[] = {{0, 1, 1, 0}, {1, 1, 0, 1}, {-1, 0, 0, 1}, {0, 1, -1, -1}};
  const auto& entries = catalog().entries;
  for (const IntMat& u : gens)
    for (const CatalogEntry& e : entries) {
      std::vector<Subgroup> moved;
      for (const Subgroup& s : e.lattices) moved.push_back(image(u, s));
      const CatalogEntry m = make_entry(moved);
      CHECK(m.indices == e.indices);
      CHECK(is_cover(m.lattices));
      CHECK(std::count(entries.begin(), entries.end(), m) == 1);
    }
}

TEST_CASE("every covering produced by the search has density above 1") {
  const auto raw = find_lattices(CoveringTuple{}, 0);
  // Raw tuples may carry rank-1 slots; they have density 0 and cannot help.
  for (const CoveringTuple& t : raw) {
    std::vector<Subgroup> nz;
    for (const Subgroup& s : t)
      if (s.rank() == 2) nz.push_back(s);
    CHECK(density_sum(nz) > 1);
  }
}

TEST_CASE("covers survive refinement only by adding lattices") {
  std::mt19937 rng(8);
  for (const CatalogEntry& e : catalog().entries) {
    // Intersecting any component with a proper lattice breaks minimal covers.
    const std::size_t i = rng() % e.length();
    std::vector<Subgroup> ls = e.lattices;
    ls[i] = intersect(ls[i], Subgroup::hermite(1, 0, 2 + static_cast<std::int64_t>(rng() % 3)));
    if (ls[i] != e.lattices[i]) CHECK_FALSE(is_cover(ls));
    // Adding Z^2 itself always covers.
    std::vector<Subgroup> plus = e.lattices;
    plus.push_back(Subgroup::full());
    CHECK(is_cover(plus));
  }
}

TEST_CASE("lattice_of is invariant under integral unimodular left factors") {
  std::mt19937 rng(21);
  std::uniform_int_distribution<int> num(-3, 3), den(1, 3);
  const RatMat2 us[] = {{0, 1, 1, 0}, {1, 1, 0, 1}, {-1, 0, 0, 1}, {0, 1, -1, -1}};
  for (int i = 0; i < 200; ++i) {
    RatMat2 g{Rat(num(rng), den(rng)), Rat(num(rng), den(rng)), Rat(num(rng), den(rng)), Rat(num(rng), den(rng))};
    for (Rat* e : {&g.a, &g.b, &g.c, &g.d}) e->canonicalize();
    if (g.det() == 0) continue;
    for (const RatMat2& u : us) CHECK(lattice_of(u * g) == lattice_of(g));
  }
}

TEST_CASE("conjugating R by an integral unimodular matrix keeps it integral") {
  const GroupElement r{"R", matrix_R(), 3};
  const RatMat2 us[] = {{0, 1, 1, 0}, {1, 1, 0, 1}, {-1, 0, 0, 1}, {2, 1, 1, 1}, {1, -3, 0, 1}};
  for (const RatMat2& u : us) CHECK(corollary_case(conjugate(u, r).matrix) == CorollaryCase::A);
  CHECK(corollary_case(conjugate(RatMat2::diag(Rat(1, 3), 1), r).matrix) == CorollaryCase::None);
}

TEST_CASE("dagger commutes with evaluation") {
  std::mt19937 rng(13);
  std::uniform_int_distribution<int> e(-9, 9);
  for (int i = 0; i < 100; ++i) {
    std::vector<Rat> cs;
    const int d = 3 + i % 4;
    for (int k = 0; k <= d; ++k) cs.emplace_back(e(rng), 1 + (rng() % 4));
    for (Rat& c : cs) c.canonicalize();
    if (std::all_of(cs.begin(), cs.end(), [](const Rat& c) { return c == 0; })) continue;
    const BinaryForm f(cs);
    Rat x(e(rng), 1 + (rng() % 5));
    x.canonicalize();
    const Rat y(e(rng));
    CHECK(evaluate(dagger(f), x, y) == evaluate(f, 2 * x, y));
  }
}

TEST_CASE("F0 and its dagger share values on large boxes") {
  // Every F0 value with |x|,|y| <= 25 is a dagger value somewhere in |x|,|y| <= 150, and back.
  const ValueComparison c = cross_value_check(form_F0(), dagger(form_F0()), 25, 150);
  CHECK(c.g_values_missing_from_f.empty());
  CHECK(c.f_values_missing_from_g.empty());
}
