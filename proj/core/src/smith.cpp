#include "weilcensus/smith.hpp"

#include <utility>

#include "weilcensus/errors.hpp"

namespace weilcensus {
namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}
void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}
// row[dst] += f * row[src]
void add_row(IntMatrix& m, std::size_t dst, std::size_t src, const BigInt& f) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) += f * m(src, j);
}
void add_col(IntMatrix& m, std::size_t dst, std::size_t src, const BigInt& f) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) += f * m(i, src);
}
void negate_row(IntMatrix& m, std::size_t r) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
  const std::size_t rows = a.rows(), cols = a.cols();
  IntMatrix d = a;
  IntMatrix left = IntMatrix::identity(rows);
  IntMatrix right = IntMatrix::identity(cols);
  const std::size_t n = std::min(rows, cols);

  for (std::size_t t = 0; t < n; ++t) {
    for (;;) {
      // Pivot: smallest nonzero absolute value in the trailing block.
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (d(i, j) != 0 && (pr == rows || abs(d(i, j)) < abs(d(pr, pc)))) {
            pr = i;
            pc = j;
          }
      if (pr == rows) break;  // trailing block is zero
      swap_rows(d, t, pr);
      swap_rows(left, t, pr);
      swap_cols(d, t, pc);
      swap_cols(right, t, pc);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (d(i, t) == 0) continue;
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), d(i, t).get_mpz_t(), d(t, t).get_mpz_t());
        add_row(d, i, t, -q);
        add_row(left, i, t, -q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (d(t, j) == 0) continue;
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), d(t, j).get_mpz_t(), d(t, t).get_mpz_t());
        add_col(d, j, t, -q);
        add_col(right, j, t, -q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold an offending row into row t and go again.
      bool divisible = true;
      for (std::size_t i = t + 1; i < rows && divisible; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            add_row(d, t, i, BigInt(1));
            add_row(left, t, i, BigInt(1));
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (d(t, t) < 0) {
      negate_row(d, t);
      negate_row(left, t);
    }
  }

  SmithForm out;
  out.diag.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.diag.push_back(d(i, i));
  out.left = std::move(left);
  out.right = std::move(right);
  return out;
}

IntMatrix unimodular_inverse(const IntMatrix& u) {
  const std::size_t n = u.rows();
  if (u.cols() != n) throw ContractError("unimodular_inverse: non-square matrix");
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = Rational(u(i, j));
    aug(i, n + i) = 1;
  }
  // Gauss-Jordan on the augmented block.
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && aug(p, col) == 0) ++p;
    if (p == n) throw ContractError("unimodular_inverse: singular matrix");
    if (p != col)
      for (std::size_t j = 0; j < 2 * n; ++j) std::swap(aug(p, j), aug(col, j));
    const Rational inv = 1 / aug(col, col);
    for (std::size_t j = 0; j < 2 * n; ++j) aug(col, j) *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || aug(i, col) == 0) continue;
      const Rational f = aug(i, col);
      for (std::size_t j = 0; j < 2 * n; ++j) aug(i, j) -= f * aug(col, j);
    }
  }
  IntMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& v = aug(i, n + j);
      if (v.get_den() != 1) throw ContractError("unimodular_inverse: matrix is not unimodular");
      out(i, j) = v.get_num();
    }
  return out;
}

}  // namespace weilcensus
