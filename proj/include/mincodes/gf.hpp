#pragma once

#include <array>
#include <cstdint>

namespace mincodes {

/// A field element encoded as its symbol index. For GF(4) the symbols 0, 1, 2, 3 stand for
/// 0, 1, w, w^2 with w^2 = w + 1.
using Symbol = std::uint8_t;

/// Lookup-table arithmetic for GF(2), GF(3) and GF(4). Instances are immutable singletons.
class Field {
 public:
  /// Throws std::invalid_argument for q outside {2, 3, 4}.
  static const Field& get(int q);

  int q() const { return q_; }
  int characteristic() const { return q_ == 3 ? 3 : 2; }
  bool valid(Symbol a) const { return a < q_; }

  // Unchecked: callers guarantee valid symbols.
  Symbol add(Symbol a, Symbol b) const { return add_[a][b]; }
  Symbol sub(Symbol a, Symbol b) const { return add_[a][neg_[b]]; }
  Symbol neg(Symbol a) const { return neg_[a]; }
  Symbol mul(Symbol a, Symbol b) const { return mul_[a][b]; }

  /// Throws std::invalid_argument for a = 0.
  Symbol inv(Symbol a) const;

 private:
  explicit Field(int q);

  int q_;
  std::array<std::array<Symbol, 4>, 4> add_{};
  std::array<std::array<Symbol, 4>, 4> mul_{};
  std::array<Symbol, 4> neg_{};
  std::array<Symbol, 4> inv_{};
};

// Checked free-function forms; reject unsupported q and out-of-range symbols.
Symbol gf_add(Symbol a, Symbol b, int q);
Symbol gf_mul(Symbol a, Symbol b, int q);
Symbol gf_inv(Symbol a, int q);

}  // namespace mincodes
