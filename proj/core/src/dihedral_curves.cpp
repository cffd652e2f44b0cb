#include "weilcensus/dihedral_curves.hpp"

#include <numeric>

#include "weilcensus/errors.hpp"

namespace weilcensus {

namespace {

BigInt big(std::uint64_t x) { return BigInt(std::to_string(x)); }

void check_ell(const DihedralCensusInput& in, std::uint64_t ell) {
  if (ell == 2) throw ContractError("ell = 2 is not supported");
  if (!is_prime(ell)) throw ContractError("ell = " + std::to_string(ell) + " is not prime");
  if (in.base().q % ell == 0) throw ContractError("ell must differ from p");
}

// The census sum, with each Picard order passed through `part`.
template <class Part>
BigInt census_sum(const DihedralCensusInput& in, std::uint64_t n, Part part) {
  if (n < 1) throw ContractError("census: n must be >= 1");
  Rational total = 0;
  std::optional<BigInt> pic;
  for (const auto& b : in.betas()) {
    if (n % b.n_beta != 0) continue;
    if (!pic) pic = part(point_count(in.base().weil, n));
    total += Rational(2 * part(cover_picard_count(b, n)) - BigInt(b.e_beta) * *pic, 4);
  }
  total.canonicalize();
  if (total.get_den() != 1)
    throw ValidationError({"census at n = " + std::to_string(n) + " is " + to_string(total) +
                           ", not an integer: inconsistent beta record (check e_beta)"});
  if (total < 0) throw ValidationError({"census at n = " + std::to_string(n) + " is negative: inconsistent beta record"});
  return total.get_num();
}

}  // namespace

DihedralCensusInput DihedralCensusInput::make(ZetaData base, std::vector<BetaRecord> betas) {
  std::vector<std::string> v;
  const unsigned g = base.genus;
  if (g < 2) v.push_back("base curve has genus " + std::to_string(g) + "; the census needs genus >= 2");
  if (g >= 2 && g < 32) {
    const std::uint64_t capacity = (std::uint64_t{1} << (2 * g)) - 1;
    if (betas.size() > capacity)
      v.push_back(std::to_string(betas.size()) + " beta records exceed the capacity 2^{2g} - 1 = " +
                  std::to_string(capacity));
  }
  for (const auto& b : betas) {
    const std::string who = "beta '" + b.label + "': ";
    if (b.n_beta < 1) v.push_back(who + "n_beta must be >= 1");
    if (b.e_beta != 1 && b.e_beta != 2) v.push_back(who + "e_beta = " + std::to_string(b.e_beta) + " is not 1 or 2");
    if (b.n_beta >= 1 && b.cover_weil.q() != power(base.q, static_cast<unsigned long>(b.n_beta)))
      v.push_back(who + "cover polynomial is over F_" + b.cover_weil.q().get_str() + ", expected q^n_beta");
    if (g >= 1 && b.cover_weil.dimension() != 2 * g - 1)
      v.push_back(who + "cover has genus " + std::to_string(b.cover_weil.dimension()) + ", expected 2g - 1 = " +
                  std::to_string(2 * g - 1));
  }
  if (!v.empty()) throw ValidationError(std::move(v));
  return DihedralCensusInput(std::move(base), std::move(betas));
}

std::uint64_t DihedralCensusInput::n_b() const {
  std::uint64_t l = 1;
  for (const auto& b : betas_) l = std::lcm(l, b.n_beta);
  return l;
}

BigInt cover_picard_count(const BetaRecord& b, std::uint64_t n) {
  if (n % b.n_beta != 0) throw ContractError("cover_picard_count: n_beta does not divide n");
  return point_count(b.cover_weil, n / b.n_beta);
}

BigInt census_ell_adic(const DihedralCensusInput& in, std::uint64_t n) {
  return census_sum(in, n, [](const BigInt& x) { return x; });
}

BigInt census_mod_ell(const DihedralCensusInput& in, std::uint64_t ell, std::uint64_t n) {
  check_ell(in, ell);
  return census_sum(in, n, [ell](const BigInt& x) { return prime_to_ell_part(x, ell); });
}

std::vector<CensusRow> census_series(const DihedralCensusInput& in, std::uint64_t ell, std::uint64_t n_max) {
  check_ell(in, ell);
  std::vector<CensusRow> rows;
  const std::uint64_t nb = in.n_b();
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    CensusRow r;
    r.n = n;
    r.d = std::gcd(n, nb);
    r.j = v_ell(big(n), ell);
    r.count_ell_adic = census_ell_adic(in, n);
    r.count_mod_ell = census_mod_ell(in, ell, n);
    if (r.count_mod_ell > r.count_ell_adic)
      throw TheoremCheckFailure("census at n = " + std::to_string(n) + ": mod-ell count exceeds the ell-adic count");
    if (r.count_mod_ell != 0) {
      r.ratio = Rational(r.count_ell_adic, r.count_mod_ell);
      r.ratio->canonicalize();
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

LeadingCoefficients leading_coefficients(const DihedralCensusInput& in) {
  LeadingCoefficients out;
  out.n_b = in.n_b();
  for (auto d : divisors(out.n_b)) {
    long count = 0;
    for (const auto& b : in.betas())
      if (d % b.n_beta == 0) ++count;
    Rational c(count, 2);
    c.canonicalize();
    out.c_of_d[d] = c;
  }
  out.c1_zero = out.c_of_d.at(1) == 0;
  return out;
}

ProbeReport asymptotic_ratio_probe(const DihedralCensusInput& in, std::uint64_t ell,
                                   const std::vector<std::uint64_t>& seq) {
  check_ell(in, ell);
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (seq[i] < 1) throw ContractError("probe: n must be >= 1");
    if (i > 0 && seq[i] <= seq[i - 1]) throw ContractError("probe: n sequence must be increasing");
  }
  ProbeReport rep;
  for (auto n : seq) {
    ProbeRow row;
    row.n = n;
    row.j = v_ell(big(n), ell);
    const BigInt mod = census_mod_ell(in, ell, n);
    if (mod != 0) {
      Rational r(census_ell_adic(in, n), mod);
      r.canonicalize();
      row.ratio = r;
      row.v_ratio = v_ell(r, ell);
    }
    rep.rows.push_back(std::move(row));
  }
  if (seq.size() < 2) return rep;

  bool same_j = true;
  for (const auto& r : rep.rows) same_j = same_j && r.j == rep.rows.front().j;
  // n = n0 ell^k: every n divided by its ell-part gives the same n0.
  bool tower = !same_j;
  std::vector<std::uint64_t> ks;
  for (const auto& r : rep.rows) {
    std::uint64_t m = r.n;
    for (std::uint64_t i = 0; i < r.j; ++i) m /= ell;
    std::uint64_t first = rep.rows.front().n;
    for (std::uint64_t i = 0; i < rep.rows.front().j; ++i) first /= ell;
    tower = tower && m == first;
    ks.push_back(r.j);
  }
  std::vector<std::pair<std::uint64_t, long>> defined;
  for (std::size_t i = 0; i < rep.rows.size(); ++i)
    if (rep.rows[i].v_ratio) defined.emplace_back(ks[i], *rep.rows[i].v_ratio);

  if (same_j) {
    rep.pattern = ProbePattern::FixedJ;
    rep.holds = defined.size() >= 2 && defined[defined.size() - 1].second == defined[defined.size() - 2].second;
  } else if (tower) {
    rep.pattern = ProbePattern::EllPowerTower;
    rep.holds = defined.size() >= 2 && defined.size() == rep.rows.size();
    if (rep.holds) {
      const auto [k0, v0] = defined.front();
      Rational slope(defined[1].second - v0, static_cast<long>(defined[1].first - k0));
      slope.canonicalize();
      for (const auto& [k, v] : defined)
        if (Rational(v - v0) != slope * Rational(static_cast<long>(k - k0))) rep.holds = false;
      rep.slope = slope;
    }
  }
  return rep;
}

BigInt cover_count(const TwoTorsionModule& m, std::uint64_t n) { return fixed_two_torsion(m, n) - 1; }

BigInt cft_character_count(const ZetaData& x, std::uint64_t ell, std::uint64_t n, CharacterMode mode) {
  if (!is_prime(ell)) throw ContractError("ell = " + std::to_string(ell) + " is not prime");
  const BigInt count = point_count(x.weil, n);
  return mode == CharacterMode::EllAdic ? count : prime_to_ell_part(count, ell);
}

BigInt deformation_dimension(unsigned g, unsigned m) {
  if (g < 2) throw ContractError("deformation_dimension: genus must be >= 2");
  if (m < 1) throw ContractError("deformation_dimension: rank must be >= 1");
  return BigInt(2 * g - 2) * (BigInt(m) * m - 1);
}

}  // namespace weilcensus
