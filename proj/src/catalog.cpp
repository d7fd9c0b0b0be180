#include "latcover/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <tuple>

namespace latcover {

bool lattice_less(const Subgroup& x, const Subgroup& y) {
  const auto key = [](const Subgroup& s) {
    return std::tuple(index(s).value_or(0), s.a(), s.c(), s.b());
  };
  return key(x) < key(y);
}

CatalogEntry make_entry(std::vector<Subgroup> lattices) {
  CatalogEntry e;
  for (const Subgroup& s : lattices)
    if (s.rank() != 2) throw std::invalid_argument("catalog entries hold rank-2 lattices only: " + to_string(s));
  std::sort(lattices.begin(), lattices.end(), lattice_less);
  e.lattices = std::move(lattices);
  for (const Subgroup& s : e.lattices) e.indices.push_back(*index(s));
  std::sort(e.indices.begin(), e.indices.end());
  return e;
}

CatalogEntry canonical_entry(const CoveringTuple& tuple) {
  if (!is_cover(tuple)) throw std::invalid_argument("tuple does not cover Z^2");
  std::vector<Subgroup> kept;
  for (const Subgroup& s : tuple) {
    if (s.rank() == 0) continue;
    if (s.rank() == 1) throw std::invalid_argument("rank-1 slot in a covering tuple: " + to_string(s));
    kept.push_back(s);
  }
  return make_entry(std::move(kept));
}

namespace {

bool entry_less(const CatalogEntry& x, const CatalogEntry& y) {
  if (x.length() != y.length()) return x.length() < y.length();
  if (x.indices != y.indices) return x.indices < y.indices;
  return std::lexicographical_compare(x.lattices.begin(), x.lattices.end(), y.lattices.begin(), y.lattices.end(),
                                      lattice_less);
}

}  // namespace

void sort_entries(Catalog& catalog) { std::sort(catalog.entries.begin(), catalog.entries.end(), entry_less); }

Catalog build_catalog(const EnumerationResult& result, unsigned threads) {
  Catalog c;
  for (const CoveringTuple& t : result.minimal) c.entries.push_back(canonical_entry(t));
  sort_entries(c);
  c.provenance["slots"] = std::to_string(kSlots);
  c.provenance["forcing_points"] = std::to_string(forcing_points().size());
  c.provenance["raw_count"] = std::to_string(result.raw_count);
  c.provenance["threads"] = std::to_string(threads);
  return c;
}

Catalog generate_catalog(unsigned threads) { return build_catalog(enumerate_minimal_coverings(threads), threads); }

std::vector<CatalogEntry> query(const Catalog& catalog, const EntryPredicate& predicate) {
  std::vector<CatalogEntry> out;
  for (const CatalogEntry& e : catalog.entries)
    if (predicate(e.length(), e.indices)) out.push_back(e);
  return out;
}

std::string serialize(const CatalogEntry& entry) {
  std::string line = "len=" + std::to_string(entry.length());
  for (const Subgroup& s : entry.lattices) line += " | " + to_string(s);
  return line;
}

std::string serialize(const Catalog& catalog) {
  std::string out;
  for (const auto& [key, value] : catalog.provenance) out += "#! " + key + "=" + value + "\n";
  for (const CatalogEntry& e : catalog.entries) out += serialize(e) + "\n";
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

CatalogEntry parse_entry_line(std::string_view line, std::size_t lineno) {
  std::vector<std::string_view> fields;
  for (std::size_t start = 0;;) {
    std::size_t bar = line.find('|', start);
    fields.push_back(trim(line.substr(start, bar == std::string_view::npos ? std::string_view::npos : bar - start)));
    if (bar == std::string_view::npos) break;
    start = bar + 1;
  }
  if (fields[0].substr(0, 4) != "len=") throw CatalogParseError(lineno, "expected 'len=k'");
  std::string_view num = fields[0].substr(4);
  std::size_t len = 0;
  auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), len);
  if (ec != std::errc() || ptr != num.data() + num.size()) throw CatalogParseError(lineno, "bad length field");
  if (fields.size() - 1 != len)
    throw CatalogParseError(lineno, "length " + std::to_string(len) + " but " + std::to_string(fields.size() - 1) +
                                        " lattices");
  std::vector<Subgroup> lattices;
  for (std::size_t i = 1; i < fields.size(); ++i) {
    Subgroup s;
    try {
      s = parse_subgroup(fields[i]);
    } catch (const std::exception& e) {
      throw CatalogParseError(lineno, "bad lattice '" + std::string(fields[i]) + "': " + e.what());
    }
    if (s.rank() != 2) throw CatalogParseError(lineno, "lattice '" + std::string(fields[i]) + "' is not rank 2");
    lattices.push_back(s);
  }
  return make_entry(std::move(lattices));
}

}  // namespace

Catalog parse_catalog(std::string_view text) {
  Catalog c;
  std::size_t lineno = 0;
  while (!text.empty()) {
    ++lineno;
    std::size_t nl = text.find('\n');
    std::string_view line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (line.empty()) continue;
    if (line.substr(0, 2) == "#!") {
      std::string_view kv = trim(line.substr(2));
      std::size_t eq = kv.find('=');
      if (eq == std::string_view::npos) throw CatalogParseError(lineno, "provenance line without '='");
      c.provenance[std::string(trim(kv.substr(0, eq)))] = std::string(trim(kv.substr(eq + 1)));
      continue;
    }
    if (line.front() == '#') continue;
    c.entries.push_back(parse_entry_line(line, lineno));
  }
  return c;
}

namespace {

CatalogEntry from_matrices(std::initializer_list<std::array<std::int64_t, 4>> mats) {
  std::vector<Subgroup> ls;
  for (const auto& m : mats) ls.push_back(Subgroup::from_columns(m[0], m[1], m[2], m[3]));
  return make_entry(std::move(ls));
}

}  // namespace

// Matrices (u1 v1; u2 v2) are generated by their columns.
CatalogEntry known_length3() { return from_matrices({{2, 0, 0, 1}, {1, 0, 0, 2}, {1, 0, 1, 2}}); }

std::vector<CatalogEntry> known_length4() {
  return {
      from_matrices({{1, 0, 0, 2}, {4, 0, 0, 1}, {1, 0, 1, 2}, {2, 0, 1, 2}}),
      from_matrices({{1, 0, 0, 4}, {2, 0, 0, 1}, {1, 0, 1, 2}, {1, 0, 2, 4}}),
      from_matrices({{1, 0, 0, 2}, {2, 0, 0, 1}, {1, 0, 1, 4}, {1, 0, 3, 4}}),
      from_matrices({{1, 0, 0, 3}, {3, 0, 0, 1}, {1, 0, 1, 3}, {1, 0, 2, 3}}),
  };
}

CatalogEntry covering_4_6() {
  return from_matrices({{1, 0, 0, 4}, {4, 0, 0, 1}, {1, 0, 1, 4}, {1, 0, 3, 4}, {1, 0, 2, 4}, {2, 0, 1, 2}});
}

CatalogEntry covering_5_6() {
  return from_matrices({{1, 0, 0, 5}, {5, 0, 0, 1}, {1, 0, 1, 5}, {1, 0, 4, 5}, {1, 0, 2, 5}, {1, 0, 3, 5}});
}

bool is_removal_minimal(const CatalogEntry& entry) {
  for (std::size_t i = 0; i < entry.length(); ++i) {
    std::vector<Subgroup> rest = entry.lattices;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    if (is_cover(rest)) return false;
  }
  return true;
}

bool is_replacement_minimal(const CatalogEntry& entry, std::span<const std::int64_t> primes) {
  std::vector<Subgroup> work = entry.lattices;
  for (std::size_t i = 0; i < work.size(); ++i) {
    const Subgroup original = work[i];
    for (std::int64_t q : primes) {
      for (const Subgroup& sub : prime_index_sublattices(original, q)) {
        work[i] = sub;
        if (is_cover(work)) return false;
      }
    }
    work[i] = original;
  }
  return true;
}

bool entry_precedes(const CatalogEntry& a, const CatalogEntry& b) { return precedes(a.lattices, b.lattices); }

namespace {

bool has_prime_factor_at_least(std::int64_t n, std::int64_t bound) {
  for (std::int64_t p = 2; p * p <= n; ++p) {
    while (n % p == 0) {
      if (p >= bound) return true;
      n /= p;
    }
  }
  return n > 1 && n >= bound;
}

std::string describe(const std::vector<CatalogEntry>& es) {
  std::string s;
  for (const CatalogEntry& e : es) s += (s.empty() ? "" : "; ") + serialize(e);
  return s.empty() ? "none" : s;
}

bool same_set(std::vector<CatalogEntry> x, std::vector<CatalogEntry> y) {
  std::sort(x.begin(), x.end(), entry_less);
  std::sort(y.begin(), y.end(), entry_less);
  return x == y;
}

}  // namespace

Report verify_lemma_counts(const Catalog& catalog) {
  Report r;
  r.title = "minimal covering catalog";

  const auto of_length = [&](std::size_t k) {
    return query(catalog, [k](std::size_t len, auto) { return len == k; });
  };
  const auto l3 = of_length(3), l4 = of_length(4), l5 = of_length(5), l6 = of_length(6);

  const std::size_t expected[] = {1, 4, 9, 40};
  const std::vector<CatalogEntry>* by_len[] = {&l3, &l4, &l5, &l6};
  for (std::size_t k = 0; k < 4; ++k) {
    const std::size_t got = by_len[k]->size();
    r.add("length" + std::to_string(k + 3) + ".count", got == expected[k],
          "expected " + std::to_string(expected[k]) + ", found " + std::to_string(got));
  }
  std::size_t other = catalog.entries.size() - l3.size() - l4.size() - l5.size() - l6.size();
  r.add("lengths.in_range", other == 0, std::to_string(other) + " entries outside lengths 3..6");

  r.add("length3.known", l3.size() == 1 && l3[0] == known_length3(),
        "expected " + serialize(known_length3()) + ", found " + describe(l3));
  r.add("length4.known", same_set(l4, known_length4()),
        "expected the four known coverings, found " + describe(l4));

  const auto all_div = [](const CatalogEntry& e, std::int64_t d) {
    return std::all_of(e.indices.begin(), e.indices.end(), [d](std::int64_t i) { return i % d == 0; });
  };
  const auto any_div = [](const CatalogEntry& e, std::int64_t d) {
    return std::any_of(e.indices.begin(), e.indices.end(), [d](std::int64_t i) { return i % d == 0; });
  };

  std::vector<CatalogEntry> bad;
  for (const CatalogEntry& e : l5)
    if (all_div(e, 4)) bad.push_back(e);
  r.add("length5.no_all_indices_divisible_by_4", bad.empty(), "offending: " + describe(bad));
  bad.clear();
  for (const CatalogEntry& e : l5)
    if (any_div(e, 5)) bad.push_back(e);
  r.add("length5.no_index_divisible_by_5", bad.empty(), "offending: " + describe(bad));

  std::vector<CatalogEntry> large;
  for (const CatalogEntry& e : l6)
    if (e.indices.front() >= 4) large.push_back(e);
  r.add("length6.all_indices_at_least_4", same_set(large, {covering_4_6(), covering_5_6()}),
        "expected C4^6 and C5^6, found " + describe(large));

  std::vector<CatalogEntry> big_prime;
  for (const CatalogEntry& e : l6)
    if (std::any_of(e.indices.begin(), e.indices.end(), [](std::int64_t i) { return has_prime_factor_at_least(i, 5); }))
      big_prime.push_back(e);
  r.add("length6.prime_at_least_5_only_C5", big_prime.size() == 1 && big_prime[0] == covering_5_6(),
        "found " + describe(big_prime));

  bad.clear();
  for (const CatalogEntry& e : catalog.entries) {
    const bool full = std::any_of(e.lattices.begin(), e.lattices.end(), [](const Subgroup& s) { return s.is_full(); });
    if (full || !is_cover(e.lattices)) bad.push_back(e);
  }
  r.add("entries.cover_by_proper_lattices", bad.empty(), "offending: " + describe(bad));

  bad.clear();
  for (const CatalogEntry& e : catalog.entries) {
    Rat d = density_sum(e.lattices);
    if (!(d > 1 && d <= 6)) bad.push_back(e);
  }
  r.add("entries.density_in_(1,6]", bad.empty(), "offending: " + describe(bad));

  std::string pairs;
  std::size_t comparable = 0;
  for (std::size_t i = 0; i < catalog.entries.size(); ++i)
    for (std::size_t j = 0; j < catalog.entries.size(); ++j) {
      if (i == j || !entry_precedes(catalog.entries[i], catalog.entries[j])) continue;
      if (++comparable <= 3)
        pairs += (pairs.empty() ? "" : "; ") + serialize(catalog.entries[i]) + " <= " + serialize(catalog.entries[j]);
    }
  r.add("entries.pairwise_incomparable", comparable == 0,
        std::to_string(comparable) + " comparable ordered pairs" + (pairs.empty() ? "" : ": " + pairs));

  r.data["counts"] = {{"3", l3.size()}, {"4", l4.size()}, {"5", l5.size()}, {"6", l6.size()}};
  return r;
}

}  // namespace latcover
