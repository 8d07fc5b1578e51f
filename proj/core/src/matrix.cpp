#include "pairops/matrix.hpp"

#include <cassert>

namespace pairops {

Matrix Matrix::identity(size_t n) {
  Matrix m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Row>& rows, size_t cols) {
  Matrix m(rows.size(), cols);
  for (size_t i = 0; i < rows.size(); ++i) {
    assert(rows[i].size() == cols);
    m.set_row(i, rows[i]);
  }
  return m;
}

size_t rref_in_place(Matrix& m, const PrimeField& F) {
  size_t pivot_row = 0;
  for (size_t col = 0; col < m.cols && pivot_row < m.rows; ++col) {
    size_t sel = pivot_row;
    while (sel < m.rows && m.at(sel, col) == 0) ++sel;
    if (sel == m.rows) continue;
    if (sel != pivot_row)
      for (size_t j = 0; j < m.cols; ++j)
        std::swap(m.at(sel, j), m.at(pivot_row, j));
    const uint32_t piv_inv = F.inv(m.at(pivot_row, col));
    for (size_t j = col; j < m.cols; ++j)
      m.at(pivot_row, j) = F.mul(m.at(pivot_row, j), piv_inv);
    for (size_t i = 0; i < m.rows; ++i) {
      if (i == pivot_row) continue;
      const uint32_t f = m.at(i, col);
      if (f == 0) continue;
      for (size_t j = col; j < m.cols; ++j)
        m.at(i, j) = F.sub(m.at(i, j), F.mul(f, m.at(pivot_row, j)));
    }
    ++pivot_row;
  }
  return pivot_row;
}

Matrix kernel_basis(const Matrix& m, const PrimeField& F) {
  Matrix r = m;
  const size_t rank = rref_in_place(r, F);
  std::vector<long> pivot_of_col(m.cols, -1);
  for (size_t row = 0; row < rank; ++row) {
    size_t lead = 0;
    while (lead < m.cols && r.at(row, lead) == 0) ++lead;
    pivot_of_col[lead] = static_cast<long>(row);
  }
  std::vector<Row> basis;
  for (size_t col = 0; col < m.cols; ++col) {
    if (pivot_of_col[col] >= 0) continue;
    Row v(m.cols, 0);
    v[col] = 1;
    for (size_t c = 0; c < m.cols; ++c) {
      if (pivot_of_col[c] < 0) continue;
      const size_t prow = static_cast<size_t>(pivot_of_col[c]);
      v[c] = F.neg(r.at(prow, col));
    }
    basis.push_back(std::move(v));
  }
  Matrix k = Matrix::from_rows(basis, m.cols);
  rref_in_place(k, F);  // canonical form
  return k;
}

Matrix mat_mul(const Matrix& a, const Matrix& b, const PrimeField& F) {
  assert(a.cols == b.rows);
  Matrix c(a.rows, b.cols);
  for (size_t i = 0; i < a.rows; ++i)
    for (size_t k = 0; k < a.cols; ++k) {
      const uint32_t aik = a.at(i, k);
      if (aik == 0) continue;
      for (size_t j = 0; j < b.cols; ++j)
        c.at(i, j) = F.add(c.at(i, j), F.mul(aik, b.at(k, j)));
    }
  return c;
}

Row mat_vec(const Matrix& m, const Row& v, const PrimeField& F) {
  assert(m.cols == v.size());
  Row out(m.rows, 0);
  for (size_t i = 0; i < m.rows; ++i) {
    uint64_t acc = 0;
    for (size_t j = 0; j < m.cols; ++j)
      acc += static_cast<uint64_t>(m.at(i, j)) * v[j];
    out[i] = static_cast<uint32_t>(acc % F.p());
  }
  return out;
}

Matrix transpose(const Matrix& m) {
  Matrix t(m.cols, m.rows);
  for (size_t i = 0; i < m.rows; ++i)
    for (size_t j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
  return t;
}

size_t rank_of(Matrix m, const PrimeField& F) { return rref_in_place(m, F); }

}  // namespace pairops
