#include <doctest.h>

#include <fstream>
#include <sstream>

#include "mincodes/construct.hpp"
#include "mincodes/corpus.hpp"
#include "mincodes/minimal.hpp"
#include "oracles.hpp"

using namespace mincodes;

namespace {

std::string read_spec(const std::string& name) {
  std::ifstream in(std::string(MINCODES_SOURCE_DIR) + "/circulant/" + name);
  REQUIRE(in);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const char* kTiny = R"({"t": 2, "q": 2, "rows": [2], "columns": [2, 2],
                        "blocks": [["10", "11"]]})";

}  // namespace

TEST_CASE("circulant blocks") {
  const std::vector<Symbol> g{1, 0};
  CHECK(format_matrix(circulant(g, 4, 6)) == "101010\n010101\n101010\n010101\n");
  const std::vector<Symbol> h{1, 1, 0};
  CHECK(format_matrix(circulant(h, 3, 3)) == "110\n011\n101\n");
  CHECK_THROWS_AS(circulant(h, 1, 6), std::invalid_argument);
  CHECK(format_matrix(circulant(std::vector<Symbol>{1}, 1, 3)) == "111\n");
  CHECK_THROWS_AS(circulant(g, 3, 6), std::invalid_argument);
  CHECK_THROWS_AS(circulant(g, 2, 5), std::invalid_argument);
}

TEST_CASE("disjoint subspaces construction") {
  for (std::size_t t = 2; t <= 6; ++t) {
    CAPTURE(t);
    const auto code = disjoint_subspaces_code(t);
    const std::size_t m = (std::size_t{1} << t) - 1;
    CHECK(code.n() == 3 * m);
    CHECK(code.k() == 2 * t);
    const auto counts = oracle::weight_counts(code);
    const std::map<int, std::uint64_t> expected{{0, 1},
                                                {int(m + 1), 3 * m},
                                                {int(3 * (m + 1) / 2), m * (m - 1)}};
    CHECK(counts == expected);
    CHECK(is_minimal_geometric(code));
  }
  CHECK(disjoint_subspaces_code(3).n() > 18);
  CHECK(weight_enumerator(disjoint_subspaces_code(2)).to_string() == "1+9x^4+6x^6");
  CHECK(weight_enumerator(disjoint_subspaces_code(4)).to_string() == "1+45x^16+210x^24");
  CHECK(weight_enumerator(disjoint_subspaces_code(5)).to_string() == "1+93x^32+930x^48");
  CHECK_THROWS_AS(disjoint_subspaces_code(1), std::invalid_argument);
}

TEST_CASE("simplex codes") {
  for (int q : {2, 3, 4})
    for (std::size_t k = 1; k <= 4; ++k) {
      const auto code = simplex(k, q);
      CHECK(code.k() == k);
      CHECK(weight_enumerator(code).nonzero_weights().size() == 1);
      CHECK(oracle::weight_counts(code).size() == 2);
    }
}

TEST_CASE("the [32,13,10] generalized circulant code") {
  const auto spec = parse_circulant_spec(read_spec("c32_13.json"));
  CHECK(spec.t == 6);
  CHECK(spec.type() == "(1^1 6^2,1^2 6^5,6)");
  const auto code = generalized_circulant(spec);
  CHECK(code.n() == 32);
  CHECK(code.k() == 13);
  CHECK(weight_enumerator(code).to_string() ==
        "1+346x^10+860x^12+1636x^14+2405x^16+1840x^18+796x^20+268x^22+34x^24+6x^26");
  CHECK(weight_enumerator(code) == weight_enumerator(load_entry_code(corpus_entry("circ-32-13-10"))));
  CHECK(has_cyclic_symmetry(code, spec.col_sizes));
}

TEST_CASE("the [43,13] generalized circulant code") {
  const auto spec = parse_circulant_spec(read_spec("c43_13.json"));
  CHECK(spec.type() == "(1^1 6^2,1^1 6^7,6)");
  const auto code = generalized_circulant(spec);
  CHECK(code.generator() == load_entry_code(corpus_entry("min-43-13")).generator());
  CHECK(is_minimal_geometric(code));
  CHECK(has_cyclic_symmetry(code, spec.col_sizes));
}

TEST_CASE("cyclic symmetry detects a broken block") {
  CHECK(has_cyclic_symmetry(generalized_circulant(parse_circulant_spec(kTiny)), {2, 2}));
  const auto broken = parse_code("1011\n0110", 2);
  CHECK_FALSE(has_cyclic_symmetry(broken, {2, 2}));
}

TEST_CASE("spec JSON round trip") {
  for (const char* name : {"c32_13.json", "c43_13.json"}) {
    const auto spec = parse_circulant_spec(read_spec(name));
    const auto again = parse_circulant_spec(circulant_spec_to_json(spec));
    CHECK(assemble(again) == assemble(spec));
    CHECK(again.type() == spec.type());
  }
}

TEST_CASE("spec validation") {
  CHECK_NOTHROW(parse_circulant_spec(kTiny));
  CHECK_THROWS(parse_circulant_spec(R"({"t": 2, "q": 2, "rows": [2], "columns": [3],
                                        "blocks": [["10"]]})"));
  CHECK_THROWS(parse_circulant_spec(R"({"t": 2, "q": 2, "rows": [2], "columns": [2, 2],
                                        "blocks": [["10"]]})"));
  CHECK_THROWS(parse_circulant_spec(R"({"t": 2, "q": 2, "rows": [2], "columns": [2],
                                        "blocks": [["12"]]})"));
  CHECK_THROWS(parse_circulant_spec(R"({"t": 2, "q": 2, "rows": [2], "columns": [2],
                                        "blocks": [["10"]], "beta": "2^2"})"));
  CHECK_THROWS(generalized_circulant(parse_circulant_spec(
      R"({"t": 2, "q": 2, "systematic": true, "rows": [2], "columns": [2, 2],
          "blocks": [["11", "10"]]})")));
  CHECK_THROWS(parse_circulant_spec("not json"));
}
