#include "mincodes/matrix.hpp"

#include <stdexcept>

namespace mincodes {

Matrix Matrix::from_rows(const std::vector<std::vector<Symbol>>& rows) {
  if (rows.empty()) return {};
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw std::invalid_argument("ragged rows");
    std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
  }
  return m;
}

std::vector<Symbol> Matrix::column(std::size_t c) const {
  std::vector<Symbol> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

void Matrix::append_row(std::span<const Symbol> values) {
  if (rows_ == 0 && cols_ == 0) cols_ = values.size();
  if (values.size() != cols_) throw std::invalid_argument("row length mismatch");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::select_columns(std::span<const std::size_t> columns) const {
  Matrix out(rows_, columns.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t j = 0; j < columns.size(); ++j) out(r, j) = (*this)(r, columns[j]);
  return out;
}

RowEchelon row_reduce(const Matrix& m, const Field& field) {
  Matrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < a.cols() && lead < a.rows(); ++c) {
    std::size_t p = lead;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != lead) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(lead, j));
    }
    const Symbol scale = field.inv(a(lead, c));
    for (std::size_t j = 0; j < a.cols(); ++j) a(lead, j) = field.mul(a(lead, j), scale);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == lead || a(r, c) == 0) continue;
      const Symbol f = a(r, c);
      for (std::size_t j = 0; j < a.cols(); ++j)
        a(r, j) = field.sub(a(r, j), field.mul(f, a(lead, j)));
    }
    pivots.push_back(c);
    ++lead;
  }
  Matrix reduced(lead, a.cols());
  for (std::size_t r = 0; r < lead; ++r)
    std::copy(a.row(r).begin(), a.row(r).end(), reduced.row(r).begin());
  return {std::move(reduced), std::move(pivots)};
}

std::size_t rank(const Matrix& m, const Field& field) { return row_reduce(m, field).pivots.size(); }

Matrix null_space(const Matrix& m, const Field& field) {
  const RowEchelon e = row_reduce(m, field);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;
  Matrix basis(0, m.cols());
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Symbol> v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = field.neg(e.reduced(r, free));
    basis.append_row(v);
  }
  return basis;
}

std::string format_matrix(const Matrix& m) {
  std::string out;
  out.reserve(m.rows() * (m.cols() + 1));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (Symbol s : m.row(r)) out.push_back(static_cast<char>('0' + s));
    out.push_back('\n');
  }
  return out;
}

}  // namespace mincodes
