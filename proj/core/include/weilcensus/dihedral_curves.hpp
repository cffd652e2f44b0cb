#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "weilcensus/curve_zeta.hpp"

namespace weilcensus {

/// A nontrivial geometric double-cover label: defined over F_{q^{n_beta}},
/// with index e_beta and the Weil polynomial of the cover's Jacobian over
/// F_{q^{n_beta}} (genus 2g - 1).
struct BetaRecord {
  std::string label;
  std::uint64_t n_beta = 1;
  unsigned e_beta = 1;
  WeilPolynomial cover_weil;
};

class DihedralCensusInput {
 public:
  // Throws ValidationError on a genus below 2, more than 2^{2g} - 1 labels,
  // e_beta outside {1, 2}, or a cover polynomial of the wrong degree or base.
  static DihedralCensusInput make(ZetaData base, std::vector<BetaRecord> betas);

  const ZetaData& base() const noexcept { return base_; }
  const std::vector<BetaRecord>& betas() const noexcept { return betas_; }
  std::uint64_t n_b() const;  // lcm of the n_beta

 private:
  DihedralCensusInput(ZetaData b, std::vector<BetaRecord> v) : base_(std::move(b)), betas_(std::move(v)) {}
  ZetaData base_;
  std::vector<BetaRecord> betas_;
};

// Picard order of the cover over F_{q^n}; requires n_beta | n.
BigInt cover_picard_count(const BetaRecord& b, std::uint64_t n);

// sum over beta with n_beta | n of (1/2)(#Pic'(F_{q^n}) - (e_beta/2) #Pic(F_{q^n})).
BigInt census_ell_adic(const DihedralCensusInput& in, std::uint64_t n);
// Same with every Picard order replaced by its prime-to-ell part.
BigInt census_mod_ell(const DihedralCensusInput& in, std::uint64_t ell, std::uint64_t n);

struct CensusRow {
  std::uint64_t n = 0;
  std::uint64_t d = 0;  // gcd(n, n_B)
  std::uint64_t j = 0;  // v_ell(n)
  BigInt count_ell_adic;
  BigInt count_mod_ell;
  std::optional<Rational> ratio;  // absent when the mod-ell count vanishes
};

std::vector<CensusRow> census_series(const DihedralCensusInput& in, std::uint64_t ell, std::uint64_t n_max);

struct LeadingCoefficients {
  std::uint64_t n_b = 1;
  std::map<std::uint64_t, Rational> c_of_d;  // every divisor d of n_B
  bool c1_zero = true;
};

LeadingCoefficients leading_coefficients(const DihedralCensusInput& in);

enum class ProbePattern { FixedJ, EllPowerTower, Unclassified };

struct ProbeRow {
  std::uint64_t n = 0;
  std::uint64_t j = 0;
  std::optional<Rational> ratio;
  std::optional<long> v_ratio;
};

struct ProbeReport {
  std::vector<ProbeRow> rows;
  ProbePattern pattern = ProbePattern::Unclassified;
  // FixedJ: the last two defined valuations agree. EllPowerTower: the
  // valuation is affine in k along n = n0 ell^k. Unclassified: true.
  bool holds = true;
  std::optional<Rational> slope;  // EllPowerTower only
};

ProbeReport asymptotic_ratio_probe(const DihedralCensusInput& in, std::uint64_t ell,
                                   const std::vector<std::uint64_t>& n_sequence);

// #Pic^0(X)[2](F_{q^n}) - 1.
BigInt cover_count(const TwoTorsionModule& m, std::uint64_t n);

enum class CharacterMode { EllAdic, ModEll };
BigInt cft_character_count(const ZetaData& x, std::uint64_t ell, std::uint64_t n, CharacterMode mode);

// (2g - 2)(m^2 - 1).
BigInt deformation_dimension(unsigned g, unsigned m);

}  // namespace weilcensus
