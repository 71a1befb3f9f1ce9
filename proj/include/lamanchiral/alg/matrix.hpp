#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "lamanchiral/alg/kernels.hpp"
#include "lamanchiral/alg/ratfun.hpp"

namespace lamanchiral::alg {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix minor(std::size_t skip_row, std::size_t skip_col) const {
    Matrix m(rows_ - 1, cols_ - 1);
    for (std::size_t i = 0, r = 0; i < rows_; ++i) {
      if (i == skip_row) continue;
      for (std::size_t j = 0, c = 0; j < cols_; ++j)
        if (j != skip_col) m(r, c++) = (*this)(i, j);
      ++r;
    }
    return m;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

// Fraction-free (Bareiss) determinant; every division is exact.
Poly determinant(Matrix<Poly> a);

// adj(A)_{ij} = (-1)^{i+j} det(A without row j, column i).
Matrix<Poly> adjugate(const Matrix<Poly>& a, kernels::Exec exec = kernels::Exec::Parallel);

// Clears each row's denominators, then works over polynomials.
RatFun determinant(const Matrix<RatFun>& m);
Matrix<RatFun> inverse(const Matrix<RatFun>& m, kernels::Exec exec = kernels::Exec::Parallel);

}  // namespace lamanchiral::alg
