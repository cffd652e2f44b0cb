#include "weilcensus/matrix.hpp"

#include <utility>

#include "weilcensus/errors.hpp"

namespace weilcensus {

IntMatrix companion_matrix(const IntPolynomial& monic) {
  if (!monic.is_monic()) throw ContractError("companion_matrix: polynomial must be monic");
  const auto n = static_cast<std::size_t>(monic.degree());
  IntMatrix c(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) c(i + 1, i) = 1;
  for (std::size_t i = 0; i < n; ++i) c(i, n - 1) = -monic.coeff(i);
  return c;
}

BigInt determinant(const IntMatrix& m0) {
  if (m0.rows() != m0.cols()) throw ContractError("determinant of a non-square matrix");
  const std::size_t n = m0.rows();
  if (n == 0) return 1;
  IntMatrix m = m0;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap_row = n;
      for (std::size_t i = k + 1; i < n; ++i) {
        if (m(i, k) != 0) {
          swap_row = i;
          break;
        }
      }
      if (swap_row == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(swap_row, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

IntMatrix matrix_power(const IntMatrix& m, const BigInt& exponent) {
  if (exponent < 0) throw ContractError("matrix_power: negative exponent");
  IntMatrix result = IntMatrix::identity(m.rows());
  IntMatrix base = m;
  const std::size_t bits = mpz_sizeinbase(exponent.get_mpz_t(), 2);
  for (std::size_t b = 0; b < bits; ++b) {
    if (mpz_tstbit(exponent.get_mpz_t(), b)) result = result * base;
    if (b + 1 < bits) base = base * base;
  }
  return result;
}

namespace {
void reduce_mod(IntMatrix& m, const BigInt& modulus) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) mpz_mod(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), modulus.get_mpz_t());
}
}  // namespace

IntMatrix matrix_power_mod(const IntMatrix& m, const BigInt& exponent, const BigInt& modulus) {
  if (exponent < 0) throw ContractError("matrix_power_mod: negative exponent");
  IntMatrix result = IntMatrix::identity(m.rows());
  IntMatrix base = m;
  reduce_mod(base, modulus);
  reduce_mod(result, modulus);
  const std::size_t bits = mpz_sizeinbase(exponent.get_mpz_t(), 2);
  for (std::size_t b = 0; b < bits; ++b) {
    if (mpz_tstbit(exponent.get_mpz_t(), b)) {
      result = result * base;
      reduce_mod(result, modulus);
    }
    if (b + 1 < bits) {
      base = base * base;
      reduce_mod(base, modulus);
    }
  }
  return result;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    const Rational inv = 1 / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      const Rational f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const RatMatrix& m) {
  RatMatrix c = m;
  return rref(c).size();
}

std::optional<std::vector<Rational>> solve(const RatMatrix& a, const std::vector<Rational>& b) {
  if (a.rows() != a.cols() || b.size() != a.rows()) throw ContractError("solve: shape mismatch");
  const std::size_t n = a.rows();
  RatMatrix aug(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  const auto pivots = rref(aug);
  if (pivots.size() != n || (n > 0 && pivots.back() != n - 1)) return std::nullopt;
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = aug(i, n);
  return x;
}

std::vector<std::vector<Rational>> kernel(const RatMatrix& m) {
  RatMatrix c = m;
  const auto pivots = rref(c);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -c(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace weilcensus
