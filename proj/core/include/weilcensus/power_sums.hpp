#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "weilcensus/polynomial.hpp"

namespace weilcensus {

/// a(n) = sum_i m_i mu_i^n. The roots are grouped by irreducible factor F of
/// the minimal polynomial; for the roots mu of F the coefficient is r_F(mu),
/// r_F a rational polynomial of degree < deg F stored in `coeffs`.
struct PowerSumTerm {
  IntPolynomial factor;         // irreducible, primitive, positive leading coefficient
  std::vector<Rational> coeffs;  // r_F, ascending
  friend bool operator==(const PowerSumTerm&, const PowerSumTerm&) = default;
};

struct PowerSumFormula {
  IntPolynomial min_poly;  // squarefree, nonzero constant term, primitive
  std::vector<PowerSumTerm> terms;
  std::size_t k = 0;  // number of distinct roots
  friend bool operator==(const PowerSumFormula&, const PowerSumFormula&) = default;
};

struct FitOptions {
  // Terms at the end of the sequence that must leave the linear complexity
  // unchanged; the sequence must also have at least twice as many terms as
  // the recovered order.
  std::size_t confirmation = 2;
  // When set, accept any recurrence of order <= max_order provided the
  // sequence has at least 2 * max_order terms (no confirmation needed).
  std::optional<std::size_t> max_order;
};

struct FitResult {
  std::optional<PowerSumFormula> formula;  // empty: no fit
  std::size_t linear_complexity = 0;
  std::string reason;  // why there is no fit
  bool fits() const noexcept { return formula.has_value(); }
};

// Sequence indexed from n = 1.
FitResult fit_recurrence(const std::vector<Rational>& seq, const FitOptions& opt = {});
FitResult fit_recurrence(const std::vector<BigInt>& seq, const FitOptions& opt = {});

Rational evaluate(const PowerSumFormula& f, std::uint64_t n);

// Refit on the first 2k terms must give the same formula, and the formula must
// reproduce every term of seq.
bool prefix_determinacy_check(const PowerSumFormula& f, const std::vector<Rational>& seq);

inline constexpr long double kWeightTolerance = 1e-9L;

struct WeightEntry {
  IntPolynomial factor;
  std::string root;  // numeric representative
  long double modulus = 0;
  std::optional<long> weight;  // j with |mu| = q^{j/2}, if within tolerance
};

struct LefschetzReport {
  bool fits = false;
  std::size_t k = 0;
  std::string reason;
  std::string leading_root;
  std::vector<WeightEntry> weight_table;  // one row per root
  bool drinfeld_shape = false;
  long double tolerance = kWeightTolerance;
};

// Checks for a leading root q^{4g-3} with coefficient 1 and all other roots
// of weight j in [0, 8g - 6).
LefschetzReport detect_lefschetz(const std::vector<Rational>& seq, const BigInt& q, unsigned g,
                                 const FitOptions& opt = {}, long double tolerance = kWeightTolerance);

}  // namespace weilcensus
