#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "weilcensus/matrix.hpp"

namespace weilcensus {

using GroupElement = std::vector<BigInt>;  // one residue per invariant factor

/// Finite abelian group Z/d_1 x ... x Z/d_k (d_1 | d_2 | ..., each >= 2) with
/// an involution c. Column j of `action` is the image of the j-th generator.
class InvolutionModule {
 public:
  // Throws ValidationError if the factors are not an invariant-factor chain,
  // if the action does not preserve the relations, or if c^2 != 1.
  static InvolutionModule make(std::vector<std::uint64_t> invariant_factors, IntMatrix action);

  struct Presented;
  // Accepts any list of cyclic orders (e.g. Z/2 x Z/3) and rewrites the group
  // and the action in invariant-factor form.
  static Presented from_presentation(const std::vector<std::uint64_t>& orders, const IntMatrix& action);

  const std::vector<std::uint64_t>& invariant_factors() const noexcept { return d_; }
  const IntMatrix& action() const noexcept { return c_; }
  std::size_t rank() const noexcept { return d_.size(); }
  std::uint64_t order() const;

  GroupElement reduce(GroupElement x) const;
  GroupElement apply(const IntMatrix& endo, const GroupElement& x) const;

 private:
  InvolutionModule(std::vector<std::uint64_t> d, IntMatrix c) : d_(std::move(d)), c_(std::move(c)) {}
  std::vector<std::uint64_t> d_;
  IntMatrix c_;
};

struct InvolutionModule::Presented {
  InvolutionModule module;
  IntMatrix to_invariant;  // maps presentation coordinates to module coordinates
  GroupElement map(const GroupElement& x) const;
};

struct Subgroup {
  std::vector<GroupElement> generators;
  BigInt order;
};

Subgroup subgroup_generated(const InvolutionModule& m, std::vector<GroupElement> generators);
// Image of a well-defined endomorphism (throws ContractError otherwise).
Subgroup subgroup_image(const InvolutionModule& m, const IntMatrix& endo);
Subgroup endo_image(const InvolutionModule& m, const IntMatrix& endo, const Subgroup& h);
// M'^-: elements on which c acts as -1.
Subgroup minus_part(const InvolutionModule& m);
// [c, H] = (c - 1) H.
Subgroup commutators(const InvolutionModule& m, const Subgroup& h);
bool contains(const InvolutionModule& m, const Subgroup& big, const Subgroup& small);

IntMatrix c_minus_one(const InvolutionModule& m);
IntMatrix c_plus_one(const InvolutionModule& m);

/// M' with involution, #M, the subgroup [c, H^ab] of M', and the index e.
class DihedralDatum {
 public:
  // Validates 2M'^- in [c,M'^-] in [c,M'] in comm_hab in M'^-, computes e (and
  // checks it against `declared_e` if given), and checks
  // #M = 2 #M' / #comm_hab.
  static DihedralDatum make(InvolutionModule mprime, const BigInt& m_order, std::vector<GroupElement> comm_hab,
                            std::optional<unsigned> declared_e = std::nullopt);

  const InvolutionModule& mprime() const noexcept { return mprime_; }
  const BigInt& m_order() const noexcept { return m_order_; }
  const Subgroup& comm_hab() const noexcept { return comm_hab_; }
  unsigned e() const noexcept { return e_; }

 private:
  DihedralDatum(InvolutionModule m, BigInt mo, Subgroup s, unsigned e)
      : mprime_(std::move(m)), m_order_(std::move(mo)), comm_hab_(std::move(s)), e_(e) {}
  InvolutionModule mprime_;
  BigInt m_order_;
  Subgroup comm_hab_;
  unsigned e_;
};

// Index [comm_hab : [c, M']]; throws ValidationError unless it is 1 or 2 and
// the inclusion chain holds.
unsigned compute_e(const InvolutionModule& mprime, const Subgroup& comm_hab);

// (#M' - (e/2) #M) / 2, asserted to be a nonnegative integer.
BigInt count_dihedral_ell_adic(const DihedralDatum& d);
// Same with every order replaced by its prime-to-ell part; ell odd prime.
BigInt count_dihedral_mod_ell(const DihedralDatum& d, std::uint64_t ell);
BigInt lift_fiber_size(const DihedralDatum& d, std::uint64_t ell);

inline constexpr std::uint64_t kOracleCap = 1000000;

struct OracleResult {
  BigInt pairs;     // unordered pairs {chi, chi^c} with chi != chi^c
  BigInt fixed;     // characters with chi == chi^c
  BigInt enumerated;
};

// Exhaustive enumeration of characters of M' (restricted to prime-to-ell
// order when ell is given). Throws TheoremCheckFailure if the number of
// c-fixed characters differs from #M' / #[c, M'].
OracleResult oracle_count(const DihedralDatum& d, std::optional<std::uint64_t> ell = std::nullopt,
                          std::uint64_t cap = kOracleCap);

// Random consistent datum with #M' <= max_order; e = 2 when requested and
// possible, otherwise e = 1.
DihedralDatum random_datum(std::mt19937_64& rng, std::uint64_t max_order, bool want_e2);

}  // namespace weilcensus
