#include <doctest.h>

#include <bit>
#include <cmath>
#include <random>

#include "mincodes/code.hpp"
#include "mincodes/construct.hpp"
#include "mincodes/corpus.hpp"
#include "mincodes/kernels.hpp"
#include "mincodes/minimal.hpp"
#include "oracles.hpp"

using namespace mincodes;

namespace {

const char* kHamming = "1000110\n0100011\n0010111\n0001101\n";

LinearCode corpus_code(const std::string& id) { return load_entry_code(corpus_entry(id)); }

WeightEnumerator we_of(std::size_t n, std::size_t k, int q, std::map<std::size_t, int> counts) {
  std::vector<BigInt> c(n + 1, 0);
  for (auto [w, v] : counts) c[w] = v;
  return WeightEnumerator(n, k, q, c);
}

}  // namespace

TEST_CASE("parse_code accepts block spacing, comments and continuations") {
  const auto code = parse_code("# header\n10 1\n\n01 \\\n 1\n", 2);
  CHECK(code.n() == 3);
  CHECK(code.k() == 2);
  CHECK(format_matrix(code.generator()) == "101\n011\n");

  const auto full = parse_code("10\n01", 2);
  CHECK(full.n() == 2);
  CHECK(full.k() == 2);
}

TEST_CASE("parse_code reports malformed input with its location") {
  try {
    parse_code("101\n10\n", 2);
    FAIL("ragged rows accepted");
  } catch (const ParseError& e) {
    CHECK(e.row() == 2);
  }
  try {
    parse_code("101\n1201\n", 2);
    FAIL("symbol 2 accepted over GF(2)");
  } catch (const ParseError& e) {
    CHECK(e.row() == 2);
    CHECK(e.column() == 2);
  }
  CHECK_THROWS_AS(parse_code("", 2), ParseError);
  CHECK_THROWS_AS(parse_code("# only a comment\n", 3), ParseError);
  CHECK_THROWS_AS(parse_code("1x1\n", 2), ParseError);
  CHECK_THROWS_AS(parse_code("11\n11", 2), ParseError);
  const auto reduced = parse_code("11\n11", 2, RankPolicy::reduce);
  CHECK(reduced.k() == 1);
  CHECK(reduced.n() == 2);
}

TEST_CASE("the generator is stored exactly as parsed") {
  const auto code = parse_code("110\n011\n", 2);
  CHECK(format_matrix(code.generator()) == "110\n011\n");
  CHECK(format_matrix(code.standard_form()) == "101\n011\n");
}

TEST_CASE("codewords are emitted in lexicographic message order") {
  const auto words = codewords(simplex(3, 2));
  CHECK(words.size() == 8);
  std::size_t fours = 0;
  for (const auto& w : words) fours += w.weight() == 4;
  CHECK(fours == 7);
  const auto expected = oracle::all_codewords(oracle::rows_of(simplex(3, 2).generator()), 2);
  for (std::size_t i = 0; i < words.size(); ++i)
    CHECK(oracle::Vec(words[i].symbols.begin(), words[i].symbols.end()) == expected[i]);

  const auto ternary = codewords(parse_code("1", 3));
  REQUIRE(ternary.size() == 3);
  CHECK(ternary[0].symbols == std::vector<Symbol>{0});
  CHECK(ternary[1].symbols == std::vector<Symbol>{1});
  CHECK(ternary[2].symbols == std::vector<Symbol>{2});
}

TEST_CASE("enumeration refuses codes over budget") {
  const auto code = simplex(5, 2);
  EnumerationLimits tight;
  tight.max_codewords = 16;
  CHECK_THROWS_AS(weight_enumerator(code, tight), BudgetExceeded);
  CHECK_THROWS_AS(codewords(code, tight), BudgetExceeded);
}

TEST_CASE("weight enumerators of printed codes") {
  CHECK(weight_enumerator(corpus_code("m6-15")).to_string() == "1+30x^6+15x^8+18x^10");
  CHECK(weight_enumerator(corpus_code("m7-8div-42")).to_string() == "1+45x^16+82x^24");
  for (int q : {2, 3, 4}) {
    const auto rep = parse_code("11111", q);
    CHECK(weight_enumerator(rep) == we_of(5, 1, q, {{0, 1}, {5, q - 1}}));
  }
}

TEST_CASE("minimum distances") {
  CHECK(min_distance(corpus_code("rec-50-20-13")) == 13);
  CHECK(min_distance(corpus_code("rec-52-21-13")) == 13);
  for (std::size_t k = 2; k <= 6; ++k) CHECK(min_distance(simplex(k, 2)) == (std::size_t{1} << (k - 1)));
  const auto hamming = parse_code(kHamming, 2);
  const auto counts = oracle::weight_counts(hamming);
  CHECK(min_distance(hamming) == static_cast<std::size_t>(std::next(counts.begin())->first));
  CHECK(min_distance(hamming) == 3);
}

TEST_CASE("residual codes") {
  const auto s = simplex(3, 2);
  for (const auto& c : codewords(s)) {
    if (c.is_zero()) continue;
    const auto r = residual_code(s, c);
    CHECK(r.n() == 3);
    CHECK(r.k() == 2);
    const auto counts = oracle::weight_counts(r);
    CHECK(counts == std::map<int, std::uint64_t>{{0, 1}, {2, 3}});
  }
  const auto rep = parse_code("1111", 2);
  CHECK_THROWS_AS(residual_code(rep, codewords(rep)[1]), std::invalid_argument);
  CHECK_THROWS_AS(residual_code(rep, Codeword{{0, 0, 0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(residual_code(rep, Codeword{{1, 1, 0, 0}}), std::invalid_argument);

  const auto c17 = corpus_code("m5-4div-17");
  std::size_t seen = 0;
  for (const auto& c : codewords(c17)) {
    if (c.weight() != 12) continue;
    ++seen;
    const auto r = residual_code(c17, c);
    CHECK(r.n() == 5);
    CHECK(r.k() <= 4);
    std::vector<oracle::Vec> restricted;
    for (const auto& row : oracle::rows_of(c17.generator())) {
      oracle::Vec v;
      for (std::size_t j = 0; j < row.size(); ++j)
        if (c.symbols[j] == 0) v.push_back(row[j]);
      restricted.push_back(v);
    }
    CHECK(static_cast<int>(r.k()) == oracle::rank(restricted, 2));
  }
  CHECK(seen == 6);
}

TEST_CASE("puncturing") {
  const auto p = puncture(parse_code("11", 2), 0);
  CHECK(p.n() == 1);
  CHECK(p.k() == 1);
  CHECK_THROWS_WITH_AS(puncture(parse_code("10\n01", 2), 1), doctest::Contains("position 1"),
                       std::invalid_argument);

  CHECK(puncture(corpus_code("m10-4div-31a"), 0).generator() == corpus_code("m10-30a").generator());
  CHECK(puncture(corpus_code("m10-4div-31b"), 0).generator() == corpus_code("m10-30b").generator());
  CHECK(is_minimal_support(corpus_code("m10-30a"), 1 << 10));

  const auto nine = corpus_code("m4-9-proj");
  for (std::size_t j = 0; j < nine.n(); ++j) {
    const auto words = oracle::all_codewords(oracle::rows_of(puncture(nine, j).generator()), 2);
    CHECK_FALSE(oracle::minimal_by_supports(words));
  }
}

TEST_CASE("parity extension") {
  CHECK_THROWS_AS(parity_extend(simplex(2, 3)), std::invalid_argument);
  const auto nine = corpus_code("m4-9-proj");
  const auto ext = parity_extend(nine);
  CHECK(ext.n() == 10);
  CHECK(ext.k() == 4);
  for (const auto& [w, c] : oracle::weight_counts(ext)) CHECK(w % 2 == 0);

  const auto odd = corpus_code("m9-26a");
  CHECK(divisibility(odd) == 1);
  const auto even = parity_extend(odd);
  CHECK(even.n() == 27);
  CHECK(divisibility(even) == 2);
  CHECK(is_minimal_support(even, 1 << 10));
}

TEST_CASE("replication multiplies every weight") {
  const auto s = simplex(2, 2);
  CHECK(replicate(s, 1) == s);
  CHECK(weight_enumerator(replicate(s, 2)).to_string() == "1+3x^4");
  const auto line = simplex(2, 3);
  CHECK(divisibility(line) == 3);
  CHECK(divisibility(replicate(line, 3)) == 9);
  CHECK_THROWS_AS(replicate(s, 0), std::invalid_argument);
}

TEST_CASE("MacWilliams transform") {
  const auto hamming = parse_code(kHamming, 2);
  const auto dual = macwilliams_dual(weight_enumerator(hamming));
  CHECK(dual.to_string() == "1+7x^4");
  CHECK(oracle::to_map(dual) == oracle::dual_counts(oracle::rows_of(hamming.generator()), 2));
  CHECK(dual.k() == 3);

  for (int q : {2, 3, 4}) {
    Matrix id(3, 3);
    for (std::size_t i = 0; i < 3; ++i) id(i, i) = 1;
    const auto zero = macwilliams_dual(weight_enumerator(LinearCode(id, q)));
    CHECK(zero.to_string() == "1");
    CHECK(zero.k() == 0);
  }
  // Two words cannot form a 2-dimensional binary code.
  CHECK_THROWS_AS(macwilliams_dual(we_of(3, 2, 2, {{0, 1}, {1, 1}})), std::invalid_argument);
}

TEST_CASE("random codes: enumerator invariants") {
  std::mt19937_64 rng(20240611);
  for (int q : {2, 3, 4}) {
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t k = 1 + rng() % (q == 2 ? 8 : 5);
      const std::size_t n = k + rng() % 8;
      const auto code = oracle::random_code(rng, k, n, q);
      CAPTURE(format_matrix(code.generator()));
      const auto we = weight_enumerator(code);
      CHECK(oracle::to_map(we) == oracle::weight_counts(code));
      CHECK(we.total() == BigInt(code.size()));
      CHECK(we[0] == 1);
      CHECK(min_distance(code) == we.min_weight());
      CHECK(macwilliams_dual(macwilliams_dual(we)) == we);
      if (n > k && std::pow(q, n) <= 1 << 16) {
        const auto dual = oracle::dual_counts(oracle::rows_of(code.generator()), q);
        CHECK(oracle::to_map(macwilliams_dual(we)) == dual);
        CHECK(oracle::to_map(weight_enumerator(dual_code(code))) == dual);
      }
      for (std::size_t t : {2, 3}) {
        const auto rep = weight_enumerator(replicate(code, t));
        for (std::size_t w = 0; w <= n; ++w) CHECK(rep[w * t] == we[w]);
        CHECK(rep.total() == we.total());
      }
    }
  }
}

TEST_CASE("random codes: puncturing the parity position then re-extending") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t k = 1 + rng() % 7;
    const auto even = parity_extend(oracle::random_code(rng, k, k + 1 + rng() % 6, 2));
    const auto again = parity_extend(puncture(even, even.n() - 1));
    CHECK(weight_enumerator(again) == weight_enumerator(even));
  }
}

TEST_CASE("packed binary weights agree with symbol counting") {
  std::mt19937_64 rng(99);
  for (std::size_t k : {8, 14, 20}) {
    const auto code = oracle::random_code(rng, k, 70, 2);
    for (int i = 0; i < 1000; ++i) {
      std::vector<Symbol> msg(k);
      std::uint64_t mask = rng();
      std::vector<std::uint64_t> packed(code.words(), 0);
      for (std::size_t r = 0; r < k; ++r) {
        msg[r] = static_cast<Symbol>((mask >> r) & 1);
        if (msg[r])
          for (std::size_t w = 0; w < code.words(); ++w) packed[w] ^= code.packed_row(r)[w];
      }
      std::size_t pop = 0;
      for (auto w : packed) pop += static_cast<std::size_t>(std::popcount(w));
      const auto word = code.encode(msg);
      CHECK(pop == static_cast<std::size_t>(oracle::weight(oracle::Vec(word.begin(), word.end()))));
    }
  }
}
