#include "latcover/covering.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>
#include <variant>

namespace latcover {

namespace {

constexpr Vec2Z kForcingPoints[] = {
    {1, 0},  {0, 1},   {1, 1},   {1, -1},  {1, 2},   {2, 1},   {1, 3},   {3, 1},   {1, -3},  {3, -1},
    {1, 4},  {2, 3},   {3, 2},   {4, 1},   {1, -4},  {2, -3},  {3, -2},  {4, -1},  {5, 1},   {1, 5},
    {5, -1}, {1, -5},  {1, 6},   {2, 5},   {3, 4},   {4, 3},   {5, 2},   {6, 1},   {1, 7},   {3, 5},
    {5, 3},  {7, 1},   {1, 8},   {2, 7},   {4, 5},   {5, 4},   {7, 2},   {8, 1},   {1, 9},   {3, 7},
    {7, 3},  {9, 1},   {1, 10},  {2, 9},   {3, 8},   {4, 7},   {5, 6},   {6, 5},   {7, 4},   {8, 3},
    {9, 2},  {10, 1},  {1, 11},  {5, 7},   {7, 5},   {11, 1},  {1, 12},  {2, 11},  {3, 8},   {4, 7},
    {5, 8},  {6, 7},   {7, 6},   {8, 5},   {9, 4},   {10, 3},  {11, 2},  {12, 1},  {1, 13},  {3, 11},
    {5, 9},  {9, 5},   {11, 3},  {13, 1},  {1, 14},  {2, 13},  {4, 11},  {7, 8},   {8, 7},   {11, 4},
    {13, 2}, {14, 1},  {1, 15},  {3, 13},  {5, 11},  {7, 9},   {9, 7},   {11, 5},  {13, 3},  {15, 1},
    {1, 16}, {8, 9},   {9, 8},   {16, 1},  {2, 15},  {1, 30},  {1, 17},  {30, 1},  {17, 1},
};

Vec2Z point_at(std::size_t index) {
  if (index >= std::size(kForcingPoints))
    throw ForcingListExhausted("forcing list exhausted at position " + std::to_string(index));
  return kForcingPoints[index];
}

// One step of output in traversal order: a solution, or a deferred subtree.
struct Subtree {
  CoveringTuple tuple;
  std::size_t point_index;
};
using Item = std::variant<CoveringTuple, Subtree>;

// Recursion of the search. Below `defer_depth` levels, subtrees are handed
// to `emit` instead of being explored, so callers can fan them out.
template <class Emit>
void search(CoveringTuple& slots, std::size_t point_index, int depth, int defer_depth, Emit&& emit) {
  Vec2Z v = point_at(point_index);

  std::size_t lattice_index = 0;
  while (slots[lattice_index].rank() != 0 && lattice_index < kSlots - 1) ++lattice_index;

  for (bool advanced = true; advanced;) {
    advanced = false;
    for (const Subgroup& s : slots) {
      if (contains(s, v)) {
        advanced = true;
        v = point_at(++point_index);
        break;
      }
    }
  }

  for (std::size_t i = 0; i <= lattice_index; ++i) {
    Subgroup enlarged = adjoin(slots[i], v);
    if (enlarged.is_full()) continue;
    const Subgroup previous = slots[i];
    slots[i] = enlarged;
    if (is_cover(slots)) {
      emit(Item{slots});
    } else if (depth + 1 >= defer_depth) {
      emit(Item{Subtree{slots, point_index + 1}});
    } else {
      search(slots, point_index + 1, depth + 1, defer_depth, emit);
    }
    slots[i] = previous;
  }
}

void search_all(CoveringTuple slots, std::size_t point_index, std::vector<CoveringTuple>& out) {
  search(slots, point_index, 0, std::numeric_limits<int>::max(),
         [&](Item&& item) { out.push_back(std::get<CoveringTuple>(std::move(item))); });
}

}  // namespace

std::span<const Vec2Z> forcing_points() { return {kForcingPoints, std::size(kForcingPoints)}; }

std::vector<CoveringTuple> find_lattices(const CoveringTuple& start, std::size_t point_index) {
  std::vector<CoveringTuple> out;
  search_all(start, point_index, out);
  return out;
}

std::vector<CoveringTuple> find_lattices_parallel(const CoveringTuple& start, std::size_t point_index,
                                                  unsigned threads) {
  if (threads <= 1) return find_lattices(start, point_index);

  std::vector<Item> items;
  CoveringTuple slots = start;
  search(slots, point_index, 0, 4, [&](Item&& item) { items.push_back(std::move(item)); });

  std::vector<std::vector<CoveringTuple>> results(items.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    for (std::size_t k = next++; k < items.size(); k = next++) {
      if (auto* sub = std::get_if<Subtree>(&items[k])) {
        try {
          search_all(sub->tuple, sub->point_index, results[k]);
        } catch (...) {
          if (!failed.exchange(true)) failure = std::current_exception();
        }
      } else {
        results[k].push_back(std::get<CoveringTuple>(items[k]));
      }
    }
  };
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  pool.clear();
  if (failure) std::rethrow_exception(failure);

  std::vector<CoveringTuple> out;
  for (auto& r : results) out.insert(out.end(), r.begin(), r.end());
  return out;
}

CoveringTuple prune(CoveringTuple tuple) {
  for (std::size_t i = 0; i < kSlots; ++i) {
    const Subgroup previous = tuple[i];
    tuple[i] = Subgroup::zero();
    if (!is_cover(tuple)) tuple[i] = previous;
  }
  // Stable compaction of nonzero slots to the front.
  std::stable_partition(tuple.begin(), tuple.end(), [](const Subgroup& s) { return s.rank() != 0; });
  return tuple;
}

std::optional<std::array<std::size_t, kSlots>> prefix_witness(const CoveringTuple& a, const CoveringTuple& b) {
  std::size_t k = 0;
  while (k < kSlots - 1 && a[k].rank() != 0) ++k;

  std::array<std::size_t, kSlots> sigma{};
  std::iota(sigma.begin(), sigma.end(), std::size_t{0});
  do {
    bool ok = true;
    for (std::size_t i = 0; i < kSlots && ok; ++i) ok = is_subgroup_of(a[i], b[sigma[i]]);
    if (ok) return sigma;
  } while (std::next_permutation(sigma.begin(), sigma.begin() + static_cast<std::ptrdiff_t>(k + 1)));
  return std::nullopt;
}

bool precedes_prefix(const CoveringTuple& a, const CoveringTuple& b) { return prefix_witness(a, b).has_value(); }

namespace {

bool assign(std::span<const Subgroup> a, std::size_t i, std::span<const Subgroup> b, std::vector<bool>& used) {
  while (i < a.size() && a[i].rank() == 0) ++i;
  if (i == a.size()) return true;
  for (std::size_t j = 0; j < b.size(); ++j) {
    if (used[j] || !is_subgroup_of(a[i], b[j])) continue;
    used[j] = true;
    if (assign(a, i + 1, b, used)) return true;
    used[j] = false;
  }
  return false;
}

}  // namespace

bool precedes(std::span<const Subgroup> a, std::span<const Subgroup> b) {
  std::vector<bool> used(b.size(), false);
  return assign(a, 0, b, used);
}

std::optional<std::array<std::size_t, kSlots>> precedence_witness(const CoveringTuple& a, const CoveringTuple& b) {
  std::array<std::size_t, kSlots> sigma{};
  std::iota(sigma.begin(), sigma.end(), std::size_t{0});
  do {
    bool ok = true;
    for (std::size_t i = 0; i < kSlots && ok; ++i) ok = is_subgroup_of(a[i], b[sigma[i]]);
    if (ok) return sigma;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return std::nullopt;
}

std::size_t nonzero_slots(const CoveringTuple& t) {
  return static_cast<std::size_t>(std::count_if(t.begin(), t.end(), [](const Subgroup& s) { return s.rank() != 0; }));
}

namespace {

std::int64_t index_sum(const CoveringTuple& t) {
  std::int64_t sum = 0;
  for (const Subgroup& s : t)
    if (s.rank() == 2) sum += *index(s);
  return sum;
}

}  // namespace

bool precedes_linear_order(const CoveringTuple& a, const CoveringTuple& b) {
  const std::size_t na = nonzero_slots(a), nb = nonzero_slots(b);
  if (na != nb) return na < nb;
  const std::int64_t sa = index_sum(a), sb = index_sum(b);
  if (sa != sb) return sa > sb;
  return a < b;
}

EnumerationResult enumerate_minimal_coverings(unsigned threads) {
  const CoveringTuple empty{};
  std::vector<CoveringTuple> raw = find_lattices_parallel(empty, 0, threads);

  EnumerationResult result;
  result.raw_count = raw.size();

  // Pruned tuples with their nonzero slots sorted, so equal multisets collapse.
  std::vector<CoveringTuple> candidates;
  candidates.reserve(raw.size());
  for (const CoveringTuple& t : raw) {
    CoveringTuple pruned = prune(t);
    std::sort(pruned.begin(), pruned.begin() + static_cast<std::ptrdiff_t>(nonzero_slots(pruned)));
    candidates.push_back(pruned);
  }
  std::sort(candidates.begin(), candidates.end(), precedes_linear_order);
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  for (const CoveringTuple& t : candidates) {
    bool dominated = std::any_of(result.minimal.begin(), result.minimal.end(),
                                 [&](const CoveringTuple& kept) { return precedes(kept, t); });
    if (!dominated) result.minimal.push_back(t);
  }
  return result;
}

}  // namespace latcover
