#pragma once

#include <string>
#include <vector>

#include "weilcensus/polynomial.hpp"

namespace weilcensus {

/// A numerically isolated complex root. Values are computed at 50 decimal
/// digits and rounded for storage; `error_bound` is the radius of a disk
/// around the approximation guaranteed to contain a root.
struct ComplexRootApprox {
  long double re = 0;
  long double im = 0;
  long double modulus = 0;
  long double modulus_squared = 0;
  double error_bound = 0;
  std::string re_text;  // 25 significant digits
  std::string im_text;
};

// All complex roots of a squarefree integer polynomial of degree >= 1
// (Aberth iteration followed by Newton polishing). Roots are ordered by
// argument then modulus. Throws ContractError if f is not squarefree.
std::vector<ComplexRootApprox> complex_roots(const IntPolynomial& squarefree);

}  // namespace weilcensus
