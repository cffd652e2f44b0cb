#include "weilcensus/ell_invariants.hpp"

#include <numeric>
#include <sstream>

#include "weilcensus/errors.hpp"

namespace weilcensus {

namespace {

void check_ell(const WeilPolynomial& a, std::uint64_t ell) {
  if (!is_prime(ell)) throw ContractError("ell = " + std::to_string(ell) + " is not prime");
  if (a.q() % ell == 0) throw ContractError("ell must differ from p");
}

BigInt big(std::uint64_t x) { return BigInt(std::to_string(x)); }

// Multiplicative order of T in (F_ell[T]/(f))^*, f irreducible with f(0) != 0.
std::uint64_t order_of_t(const FpPoly& f) {
  const std::uint64_t ell = f.modulus();
  BigInt group = power(big(ell), static_cast<unsigned long>(f.degree())) - 1;
  BigInt order = group;
  const FpPoly t = FpPoly::x(ell);
  for (const auto& [r, e] : factor_integer(group)) {
    for (unsigned i = 0; i < e; ++i) {
      if (!pow_mod(t, order / r, f).is_one()) break;
      order /= r;
    }
  }
  if (!order.fits_ulong_p()) throw ContractError("h_ell does not fit in 64 bits");
  return order.get_ui();
}

}  // namespace

HAndG compute_h_and_g(const WeilPolynomial& a, std::uint64_t ell) {
  check_ell(a, ell);
  HAndG out;
  std::vector<std::pair<std::uint64_t, unsigned>> orders;  // (order, roots counted with multiplicity)
  if (a.dimension() > 0) {
    for (const auto& [f, mult] : factor_mod_prime(poly_mod_prime(a.ch(), ell))) {
      const std::uint64_t o = order_of_t(f);
      orders.emplace_back(o, static_cast<unsigned>(f.degree()) * mult);
      out.h_ell = std::lcm(out.h_ell, o);
    }
  }
  for (auto d : divisors(out.h_ell)) {
    unsigned g = 0;
    for (const auto& [o, count] : orders)
      if (d % o == 0) g += count;
    out.g_of_d[d] = g;
  }
  return out;
}

BigInt torsion_part(const WeilPolynomial& a, std::uint64_t ell, std::uint64_t n) {
  check_ell(a, ell);
  return ell_part(point_count(a, n), ell);
}

std::size_t count_valuation(const WeilPolynomial& a, std::uint64_t ell, const BigInt& n) {
  check_ell(a, ell);
  if (a.dimension() == 0) return 0;
  for (unsigned long k = 16;; k *= 2) {
    const BigInt modulus = power(big(ell), k);
    const BigInt r = point_count_mod(a, n, modulus);
    if (r != 0) return v_ell(r, ell);
    if (k > (1ul << 20)) throw TheoremCheckFailure("count_valuation: count vanishes modulo ell^" + std::to_string(k));
  }
}

BigInt EllInvariants::N(std::uint64_t d, std::uint64_t j) const {
  const auto it = valuations.find(d);
  if (it == valuations.end()) throw ContractError("N: " + std::to_string(d) + " does not divide h_ell");
  if (j < it->second.size()) return power(big(ell), it->second[j]);
  // Beyond the computed range the stabilization law determines the value.
  const std::size_t last = it->second.size() - 1;
  return power(big(ell), it->second[last] + g_of_d.at(d) * (j - last));
}

EllInvariants compute_j_and_table(const WeilPolynomial& a, std::uint64_t ell, const HAndG& hg, unsigned safety,
                                  std::uint64_t min_j_max) {
  check_ell(a, ell);
  if (safety < 2) throw ContractError("safety margin must be >= 2");
  EllInvariants inv;
  inv.ell = ell;
  inv.h_ell = hg.h_ell;
  inv.g_of_d = hg.g_of_d;
  inv.safety = safety;
  for (const auto& [d, g] : hg.g_of_d) inv.valuations[d] = {};

  auto extend_to = [&](std::uint64_t j_top) {
    for (auto& [d, vs] : inv.valuations)
      while (vs.size() <= j_top)
        vs.push_back(count_valuation(a, ell, big(d) * power(big(ell), static_cast<unsigned long>(vs.size()))));
  };
  auto stable_at = [&](std::uint64_t j) {
    for (const auto& [d, vs] : inv.valuations)
      if (vs[j + 1] - vs[j] != inv.g_of_d.at(d)) return false;
    return true;
  };

  // The window must hold, then two further steps are asserted; a window that
  // fails the extra steps was premature and the search continues.
  const unsigned span = safety + 2;
  bool found = false;
  for (std::uint64_t js = 0; js <= kMaxStabilizationSearch && !found; ++js) {
    extend_to(js + span);
    bool ok = true;
    for (std::uint64_t j = js; j < js + span && ok; ++j) ok = stable_at(j);
    if (ok) {
      inv.j_ell = js;
      found = true;
    }
  }
  if (!found) {
    std::ostringstream msg;
    msg << "stabilization not reached within " << kMaxStabilizationSearch << " steps; partial table:";
    for (const auto& [d, vs] : inv.valuations) {
      msg << " d=" << d << ":[";
      for (std::size_t j = 0; j < vs.size(); ++j) msg << (j ? "," : "") << vs[j];
      msg << "]";
    }
    throw TheoremCheckFailure(msg.str());
  }
  inv.j_max = std::max<std::uint64_t>(inv.j_ell + span, min_j_max);
  extend_to(inv.j_max);
  for (auto& [d, vs] : inv.valuations) vs.resize(inv.j_max + 1);
  return inv;
}

EllInvariants compute_ell_invariants(const WeilPolynomial& a, std::uint64_t ell, unsigned safety,
                                     std::uint64_t min_j_max) {
  return compute_j_and_table(a, ell, compute_h_and_g(a, ell), safety, min_j_max);
}

TorsionReport verify_torsion_proposition(const WeilPolynomial& a, std::uint64_t ell, std::uint64_t n_max,
                                         unsigned safety) {
  if (n_max < 1) throw ContractError("verify_torsion_proposition: n_max must be >= 1");
  std::uint64_t top_j = 0;
  for (std::uint64_t m = n_max; m >= ell; m /= ell) ++top_j;
  TorsionReport r{compute_ell_invariants(a, ell, safety, top_j), {}, false, false};
  const auto& inv = r.invariants;

  bool all = true;
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    TorsionCheck c;
    c.n = n;
    c.d = std::gcd(n, inv.h_ell);
    c.j = v_ell(big(n), ell);
    c.expected = inv.N(c.d, c.j);
    c.actual = torsion_part(a, ell, n);
    c.pass = c.expected == c.actual;
    all = all && c.pass;
    r.checks.push_back(std::move(c));
  }
  // Stabilization law on the computed table, from j_ell to the end.
  bool law = true;
  for (const auto& [d, vs] : inv.valuations)
    for (std::uint64_t j = inv.j_ell; j + 1 < vs.size(); ++j)
      if (vs[j + 1] - vs[j] != inv.g_of_d.at(d)) law = false;
  r.stabilization_holds = law;
  r.passed = all && law;
  return r;
}

}  // namespace weilcensus
