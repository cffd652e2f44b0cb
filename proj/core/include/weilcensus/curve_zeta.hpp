#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "weilcensus/finite_field.hpp"
#include "weilcensus/weil_poly.hpp"

namespace weilcensus {

inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 20;

// Coefficients are elements of F_q in the encoding of FiniteField::make(p, a).
struct WeierstrassModel {
  std::array<std::uint64_t, 5> a{};  // a1, a2, a3, a4, a6
};

// y^2 + h(x) y = f(x), ascending coefficient lists.
struct HyperellipticModel {
  std::vector<std::uint64_t> f;
  std::vector<std::uint64_t> h;
};

struct CurveSpec {
  BigInt q;
  std::optional<unsigned> genus;
  std::optional<WeierstrassModel> weierstrass;
  std::optional<HyperellipticModel> hyperelliptic;
  std::vector<BigInt> point_counts;  // N_1, N_2, ...
  std::optional<IntPolynomial> l_polynomial;
  std::optional<IntPolynomial> weil_polynomial;
};

struct ZetaData {
  BigInt q;
  unsigned genus = 0;
  WeilPolynomial weil;
  std::vector<BigInt> point_counts;  // N_1..N_g
};

struct EnumerationOptions {
  std::uint64_t cap = kDefaultEnumerationCap;
  unsigned threads = 0;  // 0: worker_count()
};

FiniteField make_field(std::uint64_t p, unsigned a);

HyperellipticModel to_hyperelliptic(const WeierstrassModel& w);

// Genus of the smooth model; throws ValidationError if the model is singular
// or not in the supported normal form.
unsigned model_genus(const BigInt& q, const HyperellipticModel& m);

// Number of F_{q^n}-points of the smooth projective model, by exhaustion.
BigInt brute_force_count(const CurveSpec& c, std::uint64_t n, const EnumerationOptions& opt = {});

ZetaData zeta_from_counts(const BigInt& q, unsigned g, const std::vector<BigInt>& counts);

// Derives the zeta data from whatever the spec carries and cross-checks every
// other piece of data against it.
ZetaData zeta_data(const CurveSpec& c, const EnumerationOptions& opt = {});

BigInt curve_count(const ZetaData& z, std::uint64_t n);
BigInt jacobian_count(const ZetaData& z, std::uint64_t n);
BigInt jacobian_count(const CurveSpec& c, std::uint64_t n, const EnumerationOptions& opt = {});

// ch(T) = T^{2g} P(1/T).
IntPolynomial l_polynomial(const WeilPolynomial& w);
WeilPolynomial weil_from_l_polynomial(const BigInt& q, const IntPolynomial& p);

}  // namespace weilcensus
