#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "latcover/covering.hpp"
#include "latcover/lattice.hpp"
#include "latcover/report.hpp"

namespace latcover {

/// An unordered covering: its rank-2 lattices sorted by (index, a, c, b),
/// plus the sorted index list. Equality is multiset equality.
struct CatalogEntry {
  std::vector<Subgroup> lattices;
  std::vector<std::int64_t> indices;

  std::size_t length() const { return lattices.size(); }
  friend bool operator==(const CatalogEntry&, const CatalogEntry&) = default;
};

// Total order on lattices used inside entries.
bool lattice_less(const Subgroup& x, const Subgroup& y);

// Builds an entry from rank-2 lattices, sorting them. No cover check.
CatalogEntry make_entry(std::vector<Subgroup> lattices);

/// Drops zero slots, sorts the rest. Throws std::invalid_argument when the
/// tuple does not cover Z^2 or has a rank-1 slot.
CatalogEntry canonical_entry(const CoveringTuple& tuple);

struct Catalog {
  std::vector<CatalogEntry> entries;
  std::map<std::string, std::string> provenance;

  friend bool operator==(const Catalog&, const Catalog&) = default;
};

// Sorts entries by (length, indices, lattices).
void sort_entries(Catalog& catalog);

Catalog build_catalog(const EnumerationResult& result, unsigned threads = 1);
Catalog generate_catalog(unsigned threads = 1);

using EntryPredicate = std::function<bool(std::size_t length, std::span<const std::int64_t> indices)>;
std::vector<CatalogEntry> query(const Catalog& catalog, const EntryPredicate& predicate);

class CatalogParseError : public std::runtime_error {
 public:
  CatalogParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// One entry per line: `len=k | a,0;c,b | ...`. Provenance is written as
/// `#! key=value` lines; other lines starting with '#' are comments.
std::string serialize(const Catalog& catalog);
std::string serialize(const CatalogEntry& entry);
Catalog parse_catalog(std::string_view text);

// The explicitly known coverings of lengths 3, 4 and 6.
CatalogEntry known_length3();
std::vector<CatalogEntry> known_length4();
CatalogEntry covering_4_6();
CatalogEntry covering_5_6();

/// Replacing any lattice by any of its index-q sublattices, q in `primes`,
/// must destroy the cover.
bool is_replacement_minimal(const CatalogEntry& entry, std::span<const std::int64_t> primes);
// Removing any single lattice must destroy the cover.
bool is_removal_minimal(const CatalogEntry& entry);

bool entry_precedes(const CatalogEntry& a, const CatalogEntry& b);

/// Checks the catalog against the known facts on minimal coverings of
/// length 3 to 6: per-length counts, the known entries, the divisibility
/// properties of lengths 5 and 6, and pairwise incomparability.
Report verify_lemma_counts(const Catalog& catalog);

}  // namespace latcover
