#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "weilcensus/integer.hpp"
#include "weilcensus/polynomial.hpp"

namespace weilcensus {

/// Dense row-major matrix with value semantics.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
      }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<BigInt>;
using RatMatrix = Matrix<Rational>;

// Companion matrix of a monic polynomial; its eigenvalues are the roots.
IntMatrix companion_matrix(const IntPolynomial& monic);

// Exact determinant by fraction-free (Bareiss) elimination.
BigInt determinant(const IntMatrix& m);

IntMatrix matrix_power(const IntMatrix& m, const BigInt& exponent);
// Entries reduced into [0, modulus).
IntMatrix matrix_power_mod(const IntMatrix& m, const BigInt& exponent, const BigInt& modulus);

std::size_t rank(const RatMatrix& m);
// Unique solution of a square nonsingular system; nullopt if singular.
std::optional<std::vector<Rational>> solve(const RatMatrix& a, const std::vector<Rational>& b);
// Basis of the right kernel.
std::vector<std::vector<Rational>> kernel(const RatMatrix& m);

}  // namespace weilcensus
