#pragma once

#include <cstddef>
#include <vector>

#include "mincodes/gf.hpp"

namespace mincodes::detail {

/// Incremental row echelon basis over GF(q).
class Basis {
 public:
  Basis(std::size_t k, const Field& f) : k_(k), f_(&f) {}

  /// Returns true when v was independent of the current basis.
  bool insert(std::vector<Symbol> v) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Symbol c = v[pivots_[i]];
      if (c == 0) continue;
      for (std::size_t j = 0; j < k_; ++j) v[j] = f_->sub(v[j], f_->mul(c, rows_[i][j]));
    }
    std::size_t p = 0;
    while (p < k_ && v[p] == 0) ++p;
    if (p == k_) return false;
    const Symbol s = f_->inv(v[p]);
    for (auto& x : v) x = f_->mul(s, x);
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
  }
  std::size_t rank() const { return rows_.size(); }
  void clear() {
    rows_.clear();
    pivots_.clear();
  }

 private:
  std::size_t k_;
  const Field* f_;
  std::vector<std::vector<Symbol>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace mincodes::detail
