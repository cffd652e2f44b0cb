#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "weilcensus/fp_poly.hpp"

namespace weilcensus {

// Largest field make_field() will build.
inline constexpr std::uint64_t kFieldSizeCap = std::uint64_t{1} << 24;

/// F_{p^a} = F_p[T]/(modulus). Elements are encoded as integers in [0, q):
/// the base-p digits are the coefficients of 1, T, T^2, ...
/// Fields with q <= 2^16 multiply through log/antilog tables; larger fields
/// reduce schoolbook products on the fly.
class FiniteField {
 public:
  using Element = std::uint32_t;

  // Modulus is the smallest monic irreducible of degree a, comparing
  // coefficients from the constant term upward.
  static FiniteField make(std::uint64_t p, unsigned a);

  std::uint64_t characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return a_; }
  std::uint64_t size() const noexcept { return q_; }
  const FpPoly& modulus() const noexcept { return modulus_; }

  Element add(Element x, Element y) const;
  Element sub(Element x, Element y) const;
  Element neg(Element x) const { return sub(0, x); }
  Element mul(Element x, Element y) const;
  Element inv(Element x) const;  // x != 0
  Element pow(Element x, std::uint64_t e) const;

  Element from_digits(const std::vector<std::uint64_t>& digits) const;
  std::vector<std::uint64_t> digits(Element x) const;

 private:
  FiniteField(std::uint64_t p, unsigned a, FpPoly modulus);
  Element mul_slow(Element x, Element y) const;
  Element inv_binary(Element x) const;

  std::uint64_t p_ = 2;
  unsigned a_ = 1;
  std::uint64_t q_ = 2;
  FpPoly modulus_;
  std::vector<std::uint64_t> low_;  // modulus minus its leading term
  std::uint64_t mod_bits_ = 0;      // p = 2: modulus as a bit mask
  std::shared_ptr<const std::vector<Element>> log_, exp_;
};

}  // namespace weilcensus
