#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "weilcensus/weil_poly.hpp"

namespace weilcensus {

struct HAndG {
  std::uint64_t h_ell = 1;
  std::map<std::uint64_t, unsigned> g_of_d;  // every divisor d of h_ell
};

// Orders of Frobenius eigenvalues in the residue fields above ell.
HAndG compute_h_and_g(const WeilPolynomial& a, std::uint64_t ell);

// ell-part of #A(F_{q^n}).
BigInt torsion_part(const WeilPolynomial& a, std::uint64_t ell, std::uint64_t n);

// v_ell(#A(F_{q^n})) for arbitrary n, computed modulo growing powers of ell.
std::size_t count_valuation(const WeilPolynomial& a, std::uint64_t ell, const BigInt& n);

inline constexpr unsigned kDefaultSafety = 3;
inline constexpr unsigned kMaxStabilizationSearch = 32;

/// h_ell, g_d, the empirical stabilization index j_ell, and the table
/// N(d, j) = #A[ell^inf](F_{q^{d ell^j}}) for d | h_ell.
struct EllInvariants {
  std::uint64_t ell = 0;
  std::uint64_t h_ell = 1;
  std::map<std::uint64_t, unsigned> g_of_d;
  std::uint64_t j_ell = 0;  // empirical: increments equal g_d from here on
  unsigned safety = kDefaultSafety;
  std::uint64_t j_max = 0;  // table covers 0..j_max
  std::map<std::uint64_t, std::vector<std::size_t>> valuations;  // d -> v_ell(N(d, j))

  BigInt N(std::uint64_t d, std::uint64_t j) const;
};

// Throws TheoremCheckFailure (carrying the partial table in its message) if no
// window of `safety` exact increments starts at j <= 32.
EllInvariants compute_j_and_table(const WeilPolynomial& a, std::uint64_t ell, const HAndG& hg,
                                  unsigned safety = kDefaultSafety, std::uint64_t min_j_max = 0);
EllInvariants compute_ell_invariants(const WeilPolynomial& a, std::uint64_t ell,
                                     unsigned safety = kDefaultSafety, std::uint64_t min_j_max = 0);

struct TorsionCheck {
  std::uint64_t n = 0;
  std::uint64_t d = 0;  // gcd(n, h_ell)
  std::uint64_t j = 0;  // v_ell(n)
  BigInt expected;
  BigInt actual;
  bool pass = false;
};

struct TorsionReport {
  EllInvariants invariants;
  std::vector<TorsionCheck> checks;
  bool stabilization_holds = false;  // law checked for the steps after j_ell
  bool passed = false;
};

// For n = 1..n_max: #A[ell^inf](F_{q^n}) == N(gcd(n, h_ell), v_ell(n)).
TorsionReport verify_torsion_proposition(const WeilPolynomial& a, std::uint64_t ell, std::uint64_t n_max,
                                         unsigned safety = kDefaultSafety);

}  // namespace weilcensus
