#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "latcover/catalog.hpp"

using namespace latcover;

namespace {

const Catalog& catalog() {
  static const Catalog c = generate_catalog(2);
  return c;
}

CoveringTuple tuple_of(const CatalogEntry& e) {
  CoveringTuple t{};
  std::copy(e.lattices.begin(), e.lattices.end(), t.begin());
  return t;
}

bool check_failed(const Report& r, const std::string& name) {
  const Check* c = r.find(name);
  return c != nullptr && !c->passed;
}

}  // namespace

TEST_CASE("canonical_entry ignores slot order and zero slots") {
  const CatalogEntry e3 = known_length3();
  CoveringTuple t = tuple_of(e3);
  std::vector<std::size_t> perm = {0, 1, 2};
  do {
    CoveringTuple p{};
    for (std::size_t i = 0; i < 3; ++i) p[i + 2] = t[perm[i]];
    CHECK(canonical_entry(p) == e3);
  } while (std::next_permutation(perm.begin(), perm.end()));
  CHECK(e3.indices == std::vector<std::int64_t>{2, 2, 2});
}

TEST_CASE("the two special length-6 coverings") {
  // (2 0; 1 2) has determinant 4 like the other five.
  CHECK(covering_4_6().indices == std::vector<std::int64_t>{4, 4, 4, 4, 4, 4});
  CHECK(covering_5_6().indices == std::vector<std::int64_t>{5, 5, 5, 5, 5, 5});
  CHECK(is_cover(covering_4_6().lattices));
  CHECK(is_cover(covering_5_6().lattices));
}

TEST_CASE("canonical_entry rejects non-covers and rank-1 slots") {
  CoveringTuple t{};
  t[0] = Subgroup::hermite(2, 0, 1);
  t[1] = Subgroup::hermite(1, 0, 2);
  CHECK_THROWS_AS(canonical_entry(t), std::invalid_argument);
  CoveringTuple r1 = tuple_of(known_length3());
  r1[3] = canonicalize({Vec2Z{1, 1}});
  CHECK_THROWS_AS(canonical_entry(r1), std::invalid_argument);
  CHECK_THROWS_AS(make_entry({canonicalize({Vec2Z{1, 0}})}), std::invalid_argument);
}

TEST_CASE("generated catalog passes every lemma check") {
  const Report r = verify_lemma_counts(catalog());
  INFO(r.to_text());
  CHECK(r.passed());
  CHECK(catalog().entries.size() == 54);
  CHECK(r.data["counts"]["3"] == 1);
  CHECK(r.data["counts"]["4"] == 4);
  CHECK(r.data["counts"]["5"] == 9);
  CHECK(r.data["counts"]["6"] == 40);
  CHECK(catalog().provenance.at("raw_count") == "6131");
}

TEST_CASE("catalog is identical across thread counts") {
  Catalog one = generate_catalog(1);
  Catalog two = catalog();
  one.provenance.erase("threads");
  two.provenance.erase("threads");
  CHECK(one == two);
}

TEST_CASE("query") {
  const auto all5 = query(catalog(), [](std::size_t len, std::span<const std::int64_t> idx) {
    return len == 6 && std::all_of(idx.begin(), idx.end(), [](std::int64_t i) { return i % 5 == 0; });
  });
  REQUIRE(all5.size() == 1);
  CHECK(all5[0] == covering_5_6());

  const auto len5_div4 = query(catalog(), [](std::size_t len, std::span<const std::int64_t> idx) {
    return len == 5 && std::any_of(idx.begin(), idx.end(), [](std::int64_t i) { return i % 4 == 0; }) &&
           std::all_of(idx.begin(), idx.end(), [](std::int64_t i) { return i % 4 == 0; });
  });
  CHECK(len5_div4.empty());

  const auto len3 = query(catalog(), [](std::size_t len, std::span<const std::int64_t>) { return len == 3; });
  REQUIRE(len3.size() == 1);
  CHECK(len3[0] == known_length3());

  const auto big = query(catalog(), [](std::size_t len, std::span<const std::int64_t> idx) {
    return len == 6 && std::all_of(idx.begin(), idx.end(), [](std::int64_t i) { return i >= 4; });
  });
  CHECK(big.size() == 2);
}

TEST_CASE("serialization") {
  // Lattices are ordered by (index, a, c, b); x = y mod 2 is (2,0;1,1) in Hermite form.
  CHECK(serialize(known_length3()) == "len=3 | 1,0;0,2 | 2,0;0,1 | 2,0;1,1");

  const std::string text = serialize(catalog());
  const Catalog back = parse_catalog(text);
  CHECK(back == catalog());
  CHECK(serialize(back) == text);

  const Catalog c = parse_catalog("# comment\n\nlen=3 | 2,0;1,1 | 1,0;0,2 | 2,0;0,1\n");
  REQUIRE(c.entries.size() == 1);
  CHECK(c.entries[0] == known_length3());
}

TEST_CASE("parse errors report the offending line") {
  const std::string good = serialize(known_length3());
  const auto line_of = [](const std::string& text) -> std::size_t {
    try {
      parse_catalog(text);
    } catch (const CatalogParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of(good + "\n" + good + "\nthis is garbage\n") == 3);
  CHECK(line_of("len=2 | 2,0;0,1 | 1,0;0,2 | 2,0;1,1\n") == 1);            // wrong length
  CHECK(line_of("len=1 | 1,0;1,2\n") == 1);                                // c >= a
  CHECK(line_of("# c\nlen=1 | 2,0;5,1\n") == 2);                           // c out of range
  CHECK(line_of("len=1 | 2,1;0,1\n") == 1);                                // nonzero upper-right entry
  CHECK(line_of("len=1 | 2,0;0,x\n") == 1);
}

TEST_CASE("mutated catalogs fail the matching checks") {
  Catalog no56 = catalog();
  std::erase(no56.entries, covering_5_6());
  REQUIRE(no56.entries.size() == 53);
  const Report r1 = verify_lemma_counts(no56);
  CHECK_FALSE(r1.passed());
  CHECK(check_failed(r1, "length6.count"));
  CHECK(check_failed(r1, "length6.prime_at_least_5_only_C5"));

  Catalog dup = catalog();
  const auto it = std::find_if(dup.entries.begin(), dup.entries.end(), [](const CatalogEntry& e) { return e.length() == 4; });
  dup.entries.push_back(*it);
  sort_entries(dup);
  const Report r2 = verify_lemma_counts(dup);
  CHECK(check_failed(r2, "entries.pairwise_incomparable"));
  CHECK(check_failed(r2, "length4.count"));

  // A non-minimal covering: the triple plus one more lattice.
  Catalog extra = catalog();
  CatalogEntry e = known_length3();
  e.lattices.push_back(Subgroup::hermite(3, 0, 1));
  extra.entries.push_back(make_entry(e.lattices));
  sort_entries(extra);
  CHECK(check_failed(verify_lemma_counts(extra), "entries.pairwise_incomparable"));
}

TEST_CASE("entry properties hold on every catalog entry") {
  const std::int64_t primes[] = {2, 3, 5, 7};
  for (const CatalogEntry& e : catalog().entries) {
    const Rat d = density_sum(e.lattices);
    CHECK(d > 1);
    CHECK(d <= 6);
    CHECK(is_removal_minimal(e));
    CHECK(is_replacement_minimal(e, primes));
    CHECK(std::is_sorted(e.indices.begin(), e.indices.end()));
    for (const Subgroup& s : e.lattices) CHECK(index(s).value_or(0) >= 2);
  }
  // Replacement minimality fails for a covering with a redundant component.
  CatalogEntry padded = known_length3();
  padded.lattices.push_back(Subgroup::hermite(3, 0, 1));
  padded = make_entry(padded.lattices);
  CHECK_FALSE(is_replacement_minimal(padded, primes));
  CHECK_FALSE(is_removal_minimal(padded));
  CHECK(entry_precedes(known_length3(), padded));
}
