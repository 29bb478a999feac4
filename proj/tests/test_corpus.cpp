#include <doctest.h>

#include <cmath>
#include <set>

#include "mincodes/corpus.hpp"
#include "mincodes/minimal.hpp"
#include "oracles.hpp"

using namespace mincodes;

namespace {

double qk(const CorpusEntry& e) { return std::pow(double(e.q), double(e.k)); }

}  // namespace

TEST_CASE("manifest is well formed") {
  const auto& entries = corpus_entries();
  CHECK(entries.size() >= 40);
  std::set<std::string> ids;
  for (const auto& e : entries) {
    CAPTURE(e.id);
    CHECK(ids.insert(e.id).second);
    CHECK_FALSE(e.anchor_section.empty());
    CHECK_FALSE(e.anchor_quote.empty());
    CHECK(e.anchor_quote.size() <= 200);
    CHECK((e.normalize.empty() || e.normalize == "drop-zero-columns"));
    if (e.expected_we) {
      BigInt total = 0;
      for (const auto& [w, a] : *e.expected_we) {
        CHECK(w <= e.n);
        total += a;
      }
      BigInt expected = 1;
      for (std::size_t i = 0; i < e.k; ++i) expected *= e.q;
      CHECK(total == expected);
      CHECK(e.expected_we->at(0) == 1);
      std::size_t d = 0;
      for (const auto& [w, a] : *e.expected_we)
        if (w > 0 && a > 0) {
          d = w;
          break;
        }
      if (e.expected_d) CHECK(*e.expected_d == d);
    }
  }
  CHECK_THROWS_AS(corpus_entry("no-such-code"), std::out_of_range);
}

TEST_CASE("every entry verifies in the fast tier") {
  const auto summary = verify_all("*", Tier::fast);
  for (const auto& r : summary.reports) {
    CAPTURE(r.id);
    CHECK((r.status == EntryStatus::pass || r.status == EntryStatus::skipped));
  }
  CHECK(summary.ok());
  CHECK(summary.passed >= 44);
}

TEST_CASE("filters") {
  CHECK(glob_match("m5-*", "m5-13a"));
  CHECK_FALSE(glob_match("m5-*", "m6-15"));
  CHECK(glob_match("q3-m[34]-*", "q3-m4-9div-38"));
  const auto s = verify_all("q3-*", Tier::fast);
  CHECK(s.reports.size() == 4);
}

TEST_CASE("weight enumerators agree with brute force") {
  for (const auto& e : corpus_entries()) {
    if (qk(e) > double(1 << 14)) continue;
    CAPTURE(e.id);
    const auto code = load_entry_code(e);
    CHECK(oracle::to_map(weight_enumerator(code)) == oracle::weight_counts(code));
  }
}

TEST_CASE("MacWilliams transform is an involution on corpus enumerators") {
  for (const auto& e : corpus_entries()) {
    if (qk(e) > double(tier_limit(Tier::fast))) continue;
    CAPTURE(e.id);
    const auto code = load_entry_code(e);
    const auto we = weight_enumerator(code);
    const auto dual = macwilliams_dual(we);
    CHECK(macwilliams_dual(dual) == we);
    if (e.n <= 20) {
      const auto counts = oracle::dual_counts(oracle::rows_of(code.generator()), e.q);
      CHECK(oracle::to_map(dual) == counts);
    }
    if (e.n - e.k <= 18) CHECK(weight_enumerator(dual_code(code)) == dual);
  }
}

TEST_CASE("a corrupted matrix is reported") {
  for (const char* id : {"m6-15", "m7-20a", "m9-26a", "q3-m3-3div-12", "m10-4div-31a"}) {
    CAPTURE(id);
    CorpusEntry e = corpus_entry(id);
    const auto pos = e.matrix_text.find_first_of("01", e.matrix_text.size() / 2);
    REQUIRE(pos != std::string::npos);
    e.matrix_text[pos] = e.matrix_text[pos] == '0' ? '1' : '0';
    const auto r = verify_entry(e);
    CHECK(r.status == EntryStatus::mismatch);
    bool failed = false;
    for (const auto& c : r.checks) failed = failed || !c.passed;
    CHECK(failed);
  }
}

TEST_CASE("zero columns are dropped only when declared") {
  const auto& gc = corpus_entry("min-35-11-gc");
  CHECK(gc.normalize == "drop-zero-columns");
  CHECK(load_entry_code(gc).n() == 35);
  CorpusEntry raw = gc;
  raw.normalize.clear();
  CHECK(load_entry_code(raw).n() == 36);
  CHECK(verify_entry(raw).status == EntryStatus::mismatch);
}

TEST_CASE("divisibility claims") {
  for (const auto& e : corpus_entries()) {
    if (!e.expected_delta || qk(e) > double(tier_limit(Tier::fast))) continue;
    CAPTURE(e.id);
    CHECK(divisibility(load_entry_code(e)) == *e.expected_delta);
  }
}

TEST_CASE("length tables") {
  for (const auto& v : divisible_length_table()) {
    CHECK(v.lo == v.hi);
    CHECK(v.lo >= std::size_t(v.q + 1) * (v.k - 1));
  }
  std::size_t prev = 0;
  for (const auto& v : binary_length_table()) {
    CHECK(v.lo <= v.hi);
    CHECK(v.lo >= prev);
    prev = v.lo;
  }
  // Every minimal corpus code respects the upper end of the binary table.
  for (const auto& e : corpus_entries()) {
    if (e.q != 2 || e.expected_minimal != std::optional<bool>(true)) continue;
    for (const auto& v : binary_length_table())
      if (v.k == e.k) CHECK(e.n >= v.lo);
  }
}
