#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "knotwork/laurent.hpp"

namespace knotwork {

// Minimal dense square-ish matrix over an exact ring. Only what the
// Burau and Seifert-matrix computations need.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, T fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n, T one) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
      }
    return r;
  }

  Matrix transposed() const {
    Matrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

// Determinant over Z[t^(1/2), t^(-1/2)] by Bareiss fraction-free
// elimination; all divisions are exact in the ring. The 0x0 determinant
// is 1 by the usual convention.
inline Laurent1 determinant(Matrix<Laurent1> m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: not square");
  const std::size_t n = m.rows();
  if (n == 0) return Laurent1::constant(1);

  Laurent1 sign = Laurent1::constant(1);
  Laurent1 prev_pivot = Laurent1::constant(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m(swap_row, k).is_zero()) ++swap_row;
      if (swap_row == n) return Laurent1::zero();
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(swap_row, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Laurent1 num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        auto q = exact_divide(num, prev_pivot);
        if (!q)
          throw std::logic_error("Bareiss elimination: inexact division");
        m(i, j) = std::move(*q);
      }
      m(i, k) = Laurent1::zero();
    }
    prev_pivot = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

}  // namespace knotwork
