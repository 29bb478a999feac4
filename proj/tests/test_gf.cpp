#include <doctest.h>

#include "mincodes/gf.hpp"
#include "oracles.hpp"

using namespace mincodes;

TEST_CASE("gf examples") {
  CHECK(gf_add(1, 1, 2) == 0);
  CHECK(gf_add(2, 2, 3) == 1);
  CHECK(gf_add(2, 3, 4) == 1);
  CHECK(gf_mul(2, 2, 3) == 1);
  CHECK(gf_mul(2, 2, 4) == 3);
  CHECK(gf_inv(2, 3) == 2);
  CHECK(gf_inv(2, 4) == 3);
  for (int q : {2, 3, 4}) {
    CHECK(gf_inv(1, q) == 1);
    for (int x = 0; x < q; ++x) CHECK(gf_mul(1, static_cast<Symbol>(x), q) == x);
  }
}

TEST_CASE("gf rejects bad input") {
  CHECK_THROWS_AS(gf_add(0, 0, 5), std::invalid_argument);
  CHECK_THROWS_AS(gf_add(2, 0, 2), std::invalid_argument);
  CHECK_THROWS_AS(gf_mul(0, 3, 3), std::invalid_argument);
  CHECK_THROWS_AS(gf_inv(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(Field::get(8), std::invalid_argument);
}

TEST_CASE("gf tables match polynomial arithmetic and satisfy the field axioms") {
  for (int q : {2, 3, 4}) {
    CAPTURE(q);
    const Field& f = Field::get(q);
    for (int a = 0; a < q; ++a) {
      for (int b = 0; b < q; ++b) {
        const auto sa = static_cast<Symbol>(a), sb = static_cast<Symbol>(b);
        CHECK(f.add(sa, sb) == oracle::add(a, b, q));
        CHECK(f.mul(sa, sb) == oracle::mul(a, b, q));
        CHECK(f.add(sa, sb) == f.add(sb, sa));
        CHECK(f.mul(sa, sb) == f.mul(sb, sa));
        CHECK(f.add(f.sub(sa, sb), sb) == a);
        for (int c = 0; c < q; ++c) {
          const auto sc = static_cast<Symbol>(c);
          CHECK(f.mul(sa, f.add(sb, sc)) == f.add(f.mul(sa, sb), f.mul(sa, sc)));
          CHECK(f.add(f.add(sa, sb), sc) == f.add(sa, f.add(sb, sc)));
          CHECK(f.mul(f.mul(sa, sb), sc) == f.mul(sa, f.mul(sb, sc)));
        }
      }
      if (a != 0) CHECK(f.mul(static_cast<Symbol>(a), f.inv(static_cast<Symbol>(a))) == 1);
    }
  }
}

TEST_CASE("GF(4) addition is XOR of the two-bit encodings") {
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) CHECK(gf_add(static_cast<Symbol>(a), static_cast<Symbol>(b), 4) == (a ^ b));
  // w^2 = w + 1
  CHECK(gf_mul(2, 2, 4) == gf_add(2, 1, 4));
}
