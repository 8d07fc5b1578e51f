#ifndef PAIROPS_MATRIX_HPP
#define PAIROPS_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "pairops/field.hpp"

namespace pairops {

// Dense row-major matrix over a prime field.  Sizes stay tiny (ambient
// dimensions of truncated models), so no sparsity games.
struct Matrix {
  size_t rows = 0;
  size_t cols = 0;
  std::vector<uint32_t> a;

  Matrix() = default;
  Matrix(size_t r, size_t c) : rows(r), cols(c), a(r * c, 0) {}

  uint32_t& at(size_t i, size_t j) { return a[i * cols + j]; }
  uint32_t at(size_t i, size_t j) const { return a[i * cols + j]; }

  Row row(size_t i) const {
    return Row(a.begin() + static_cast<long>(i * cols),
               a.begin() + static_cast<long>((i + 1) * cols));
  }
  void set_row(size_t i, const Row& r) {
    for (size_t j = 0; j < cols; ++j) at(i, j) = r[j];
  }

  static Matrix identity(size_t n);
  static Matrix from_rows(const std::vector<Row>& rows, size_t cols);

  bool operator==(const Matrix& o) const = default;
};

// In-place reduced row echelon form; returns the rank.  Pivots are 1 with
// zeros above and below, pivot columns strictly increasing.
size_t rref_in_place(Matrix& m, const PrimeField& F);

// Canonical basis (RREF rows) of the right null space {v : m v = 0}.
Matrix kernel_basis(const Matrix& m, const PrimeField& F);

Matrix mat_mul(const Matrix& a, const Matrix& b, const PrimeField& F);
Row mat_vec(const Matrix& m, const Row& v, const PrimeField& F);
Matrix transpose(const Matrix& m);
size_t rank_of(Matrix m, const PrimeField& F);

}  // namespace pairops

#endif
