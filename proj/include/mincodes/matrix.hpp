#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "mincodes/gf.hpp"

namespace mincodes {

/// Dense row-major matrix of field symbols. The field is supplied per operation.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  /// All rows must have equal length.
  static Matrix from_rows(const std::vector<std::vector<Symbol>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Symbol operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Symbol& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  std::span<const Symbol> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Symbol> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

  std::vector<Symbol> column(std::size_t c) const;

  void append_row(std::span<const Symbol> values);
  Matrix transpose() const;
  /// Keep the listed columns, in the given order.
  Matrix select_columns(std::span<const std::size_t> columns) const;

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Symbol> data_;
};

struct RowEchelon {
  Matrix reduced;                   // reduced row echelon form, zero rows removed
  std::vector<std::size_t> pivots;  // pivot column of each remaining row
};

RowEchelon row_reduce(const Matrix& m, const Field& field);
std::size_t rank(const Matrix& m, const Field& field);

/// Basis (as rows) of { x : m x^T = 0 }. Empty matrix with m.cols() columns when m has full
/// column rank.
Matrix null_space(const Matrix& m, const Field& field);

/// One row per line, symbols as digits, no separators.
std::string format_matrix(const Matrix& m);

}  // namespace mincodes
