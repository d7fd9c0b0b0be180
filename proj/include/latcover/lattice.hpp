#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "latcover/rational.hpp"

namespace latcover {

struct Vec2Z {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend constexpr bool operator==(const Vec2Z&, const Vec2Z&) = default;
  friend constexpr auto operator<=>(const Vec2Z&, const Vec2Z&) = default;
};

/// Index of a subgroup of Z^2. Rank-deficient subgroups have infinite index;
/// that case is represented by an empty optional, never by 0.
using SubgroupIndex = std::optional<std::int64_t>;

/// A subgroup of Z^2 of rank 0, 1 or 2, always held in canonical form.
///
/// Rank 2 is stored as the Hermite basis g1 = (a, 0), g2 = (c, b) with
/// a >= 1, b >= 1 and 0 <= c < a; the index is a*b. Rank 1 is stored as its
/// generator (u, v) with v > 0, or v == 0 and u > 0. Two subgroups are equal
/// iff their canonical data is equal.
class Subgroup {
 public:
  Subgroup() = default;  // the zero subgroup

  static Subgroup zero() { return {}; }
  static Subgroup full() { return hermite(1, 0, 1); }
  // Rank-2 subgroup with basis (a,0), (c,b); c is reduced mod a.
  static Subgroup hermite(std::int64_t a, std::int64_t c, std::int64_t b);
  // Subgroup generated by the columns of the matrix (u1 v1; u2 v2), i.e. by
  // (u1, u2) and (v1, v2).
  static Subgroup from_columns(std::int64_t u1, std::int64_t v1, std::int64_t u2, std::int64_t v2);

  int rank() const { return rank_; }
  bool is_full() const { return rank_ == 2 && a_ == 1 && b_ == 1; }

  // Rank 2 accessors (meaningless otherwise).
  std::int64_t a() const { return a_; }
  std::int64_t c() const { return c_; }
  std::int64_t b() const { return b_; }
  // Rank 1 generator.
  Vec2Z generator() const { return {a_, b_}; }

  std::vector<Vec2Z> basis() const;

  friend bool operator==(const Subgroup&, const Subgroup&) = default;
  friend auto operator<=>(const Subgroup&, const Subgroup&) = default;

 private:
  friend Subgroup canonicalize(std::span<const Vec2Z> gens);
  Subgroup(int rank, std::int64_t a, std::int64_t c, std::int64_t b) : rank_(rank), a_(a), c_(c), b_(b) {}

  // Field order fixes the ordering: rank first, then (a, c, b).
  int rank_ = 0;
  std::int64_t a_ = 0;
  std::int64_t c_ = 0;
  std::int64_t b_ = 0;
};

Subgroup canonicalize(std::span<const Vec2Z> gens);
inline Subgroup canonicalize(std::initializer_list<Vec2Z> gens) {
  return canonicalize(std::span<const Vec2Z>(gens.begin(), gens.size()));
}

SubgroupIndex index(const Subgroup& s);
bool contains(const Subgroup& s, Vec2Z v);
Subgroup intersect(const Subgroup& a, const Subgroup& b);
Subgroup adjoin(const Subgroup& s, Vec2Z v);
bool is_subgroup_of(const Subgroup& a, const Subgroup& b);

// Box [0, a) x [0, b) of coset representatives for Z^2 / W.
// Throws std::domain_error if W has rank < 2.
std::vector<Vec2Z> fundamental_domain(const Subgroup& w);

/// Exact test of  union(L) == Z^2.
///
/// Rank < 2 members never contribute. W is the intersection of the rank-2
/// members; the union is Z^2 iff every point of the box fundamental domain of
/// W lies in some member.
bool is_cover(std::span<const Subgroup> lattices);

// Same predicate evaluated by inclusion-exclusion over the intersections of
// the rank-2 members: the union covers iff its density is exactly 1.
bool is_cover_by_density(std::span<const Subgroup> lattices);

/// L(gamma) = { v in Z^2 : gamma v in Z^2 }. Throws on singular gamma.
Subgroup lattice_of(const RatMat2& gamma);

// Sum of 1/index over the members; throws std::domain_error on rank < 2.
Rat density_sum(std::span<const Subgroup> lattices);

// Index-q sublattices of a rank-2 subgroup, for prime q (there are q + 1).
std::vector<Subgroup> prime_index_sublattices(const Subgroup& s, std::int64_t q);

// Text form: "a,0;c,b" for rank 2, "u,v" for rank 1, "0" for rank 0.
std::string to_string(const Subgroup& s);
Subgroup parse_subgroup(std::string_view text);

}  // namespace latcover
