#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "latcover/lattice.hpp"

namespace latcover {

inline constexpr std::size_t kSlots = 6;

/// Ordered 6-tuple of subgroups; slot order matters during the search.
using CoveringTuple = std::array<Subgroup, kSlots>;

/// The fixed list of forcing points. Any six subgroups whose union contains
/// every point of this list cover Z^2. Entries are kept verbatim, including
/// the repeated (3, 8) and (4, 7).
std::span<const Vec2Z> forcing_points();

// Raised when the search runs past the end of the forcing list.
class ForcingListExhausted : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Forced-point recursion. Every returned tuple covers Z^2, and every cover
/// by proper subgroups lying above `start` dominates some returned tuple.
/// Solutions are returned in recursion order.
std::vector<CoveringTuple> find_lattices(const CoveringTuple& start, std::size_t point_index);

// Same traversal, distributing subtrees over `threads` workers. The result
// is identical to the single-threaded call for every thread count.
std::vector<CoveringTuple> find_lattices_parallel(const CoveringTuple& start, std::size_t point_index,
                                                  unsigned threads);

/// Clears slots greedily in ascending order while the tuple still covers,
/// then moves the remaining nonzero slots to the front.
CoveringTuple prune(CoveringTuple tuple);

/// A ≼ B: there is a permutation sigma with A[i] ⊆ B[sigma(i)] for every
/// slot. Zero slots of A fit anywhere, so only the nonzero slots need an
/// injective assignment. Works on tuples and on plain lattice lists.
bool precedes(std::span<const Subgroup> a, std::span<const Subgroup> b);
inline bool precedes(const CoveringTuple& a, const CoveringTuple& b) {
  return precedes(std::span<const Subgroup>(a), std::span<const Subgroup>(b));
}

// A permutation witnessing A ≼ B, if any.
std::optional<std::array<std::size_t, kSlots>> precedence_witness(const CoveringTuple& a, const CoveringTuple& b);

/// The reference containment routine: only permutations of the first k+1
/// slots are tried, k being the position of the first zero slot of A (k = 5
/// when A has none). It can miss witnesses that use later slots of B.
bool precedes_prefix(const CoveringTuple& a, const CoveringTuple& b);
std::optional<std::array<std::size_t, kSlots>> prefix_witness(const CoveringTuple& a, const CoveringTuple& b);

// Strict weak order in which every tuple comes after all tuples strictly
// below it under ≼: fewer nonzero slots first, then larger index sum.
bool precedes_linear_order(const CoveringTuple& a, const CoveringTuple& b);

struct EnumerationResult {
  std::size_t raw_count = 0;                // tuples produced by find_lattices
  std::vector<CoveringTuple> minimal;      // pruned, ≼-filtered
};

/// Full pipeline: search from the empty tuple, prune every solution, sort the
/// pruned tuples by precedes_linear_order, then keep a tuple only if no
/// previously kept tuple precedes it. The survivors are exactly the
/// ≼-minimal coverings, one representative per multiset.
EnumerationResult enumerate_minimal_coverings(unsigned threads = 1);

std::size_t nonzero_slots(const CoveringTuple& t);

}  // namespace latcover
