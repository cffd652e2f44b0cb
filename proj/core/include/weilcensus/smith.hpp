#pragma once

#include <vector>

#include "weilcensus/matrix.hpp"

namespace weilcensus {

// left * A * right = D, where D is rows x cols with diag on the main
// diagonal; diag[i] >= 0 and diag[i] | diag[i+1]; left and right unimodular.
struct SmithForm {
  std::vector<BigInt> diag;
  IntMatrix left;
  IntMatrix right;
};

SmithForm smith_normal_form(const IntMatrix& a);

// Inverse of a unimodular integer matrix (exact; throws if not unimodular).
IntMatrix unimodular_inverse(const IntMatrix& u);

}  // namespace weilcensus
