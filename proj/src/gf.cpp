#include "mincodes/gf.hpp"

#include <stdexcept>
#include <string>

namespace mincodes {

namespace {

// 0, 1, w, w^2 with w^2 = w + 1; addition is XOR of the 2-bit encodings {0, 1, 2, 3}.
constexpr Symbol kGf4Mul[4][4] = {
    {0, 0, 0, 0},
    {0, 1, 2, 3},
    {0, 2, 3, 1},
    {0, 3, 1, 2},
};

void check_symbol(const Field& f, Symbol a) {
  if (!f.valid(a)) {
    throw std::invalid_argument("symbol " + std::to_string(a) + " is not an element of GF(" +
                                std::to_string(f.q()) + ")");
  }
}

}  // namespace

Field::Field(int q) : q_(q) {
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) {
      if (q == 4) {
        add_[a][b] = static_cast<Symbol>(a ^ b);
        mul_[a][b] = kGf4Mul[a][b];
      } else {
        add_[a][b] = static_cast<Symbol>((a + b) % q);
        mul_[a][b] = static_cast<Symbol>((a * b) % q);
      }
    }
  }
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) {
      if (add_[a][b] == 0) neg_[a] = static_cast<Symbol>(b);
      if (mul_[a][b] == 1) inv_[a] = static_cast<Symbol>(b);
    }
  }
}

const Field& Field::get(int q) {
  static const Field gf2(2);
  static const Field gf3(3);
  static const Field gf4(4);
  switch (q) {
    case 2: return gf2;
    case 3: return gf3;
    case 4: return gf4;
    default:
      throw std::invalid_argument("unsupported field size q = " + std::to_string(q) +
                                  " (supported: 2, 3, 4)");
  }
}

Symbol Field::inv(Symbol a) const {
  if (a == 0 || !valid(a)) throw std::invalid_argument("zero has no multiplicative inverse");
  return inv_[a];
}

Symbol gf_add(Symbol a, Symbol b, int q) {
  const Field& f = Field::get(q);
  check_symbol(f, a);
  check_symbol(f, b);
  return f.add(a, b);
}

Symbol gf_mul(Symbol a, Symbol b, int q) {
  const Field& f = Field::get(q);
  check_symbol(f, a);
  check_symbol(f, b);
  return f.mul(a, b);
}

Symbol gf_inv(Symbol a, int q) {
  const Field& f = Field::get(q);
  check_symbol(f, a);
  return f.inv(a);
}

}  // namespace mincodes
