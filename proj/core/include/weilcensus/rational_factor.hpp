#pragma once

#include <vector>

#include "weilcensus/polynomial.hpp"

namespace weilcensus {

struct IntFactor {
  IntPolynomial factor;  // irreducible over Q, primitive, positive leading coefficient
  unsigned multiplicity;
};

// Factorization of a nonzero integer polynomial into irreducibles over Q
// (Zassenhaus: factor mod a small prime, Hensel lift, recombine). The integer
// content is dropped. Factors are sorted by degree, then coefficients.
std::vector<IntFactor> factor_over_q(const IntPolynomial& f);

}  // namespace weilcensus
