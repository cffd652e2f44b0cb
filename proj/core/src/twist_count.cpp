#include "weilcensus/twist_count.hpp"

#include <numeric>

#include "weilcensus/errors.hpp"
#include "weilcensus/smith.hpp"

namespace weilcensus {

namespace {

BigInt big(std::uint64_t x) { return BigInt(std::to_string(x)); }

BigInt mod(const BigInt& a, std::uint64_t m) {
  BigInt r;
  mpz_fdiv_r_ui(r.get_mpz_t(), a.get_mpz_t(), m);
  return r;
}

bool well_defined(const std::vector<std::uint64_t>& d, const IntMatrix& e) {
  for (std::size_t j = 0; j < d.size(); ++j)
    for (std::size_t i = 0; i < d.size(); ++i)
      if (mod(big(d[j]) * e(i, j), d[i]) != 0) return false;
  return true;
}

IntMatrix shifted(const InvolutionModule& m, int delta) {
  IntMatrix r = m.action();
  for (std::size_t i = 0; i < m.rank(); ++i) r(i, i) += delta;
  return r;
}

}  // namespace

std::uint64_t InvolutionModule::order() const {
  std::uint64_t n = 1;
  for (auto x : d_) n *= x;
  return n;
}

GroupElement InvolutionModule::reduce(GroupElement x) const {
  if (x.size() != d_.size()) throw ContractError("group element has the wrong number of coordinates");
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = mod(x[i], d_[i]);
  return x;
}

GroupElement InvolutionModule::apply(const IntMatrix& endo, const GroupElement& x) const {
  GroupElement y(d_.size());
  for (std::size_t i = 0; i < d_.size(); ++i) {
    BigInt acc = 0;
    for (std::size_t j = 0; j < d_.size(); ++j) acc += endo(i, j) * x[j];
    y[i] = mod(acc, d_[i]);
  }
  return y;
}

InvolutionModule InvolutionModule::make(std::vector<std::uint64_t> d, IntMatrix c) {
  std::vector<std::string> v;
  const std::size_t k = d.size();
  for (std::size_t i = 0; i < k; ++i) {
    if (d[i] < 2) v.push_back("invariant factor " + std::to_string(d[i]) + " is < 2");
    else if (i > 0 && d[i] % d[i - 1] != 0)
      v.push_back("invariant factors " + std::to_string(d[i - 1]) + ", " + std::to_string(d[i]) +
                  " do not form a divisor chain");
  }
  if (c.rows() != k || c.cols() != k) v.push_back("action matrix must be " + std::to_string(k) + "x" + std::to_string(k));
  if (!v.empty()) throw ValidationError(std::move(v));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) c(i, j) = mod(c(i, j), d[i]);
  if (!well_defined(d, c)) v.push_back("action does not preserve the relations of the group");
  else {
    const IntMatrix sq = c * c;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        if (mod(sq(i, j) - (i == j ? 1 : 0), d[i]) != 0) {
          v.push_back("action is not an involution: c^2 differs from the identity at (" + std::to_string(i) + "," +
                      std::to_string(j) + ")");
          i = k;
          break;
        }
  }
  if (!v.empty()) throw ValidationError(std::move(v));
  return InvolutionModule(std::move(d), std::move(c));
}

GroupElement InvolutionModule::Presented::map(const GroupElement& x) const {
  if (x.size() != to_invariant.cols()) throw ContractError("element has the wrong number of coordinates");
  GroupElement y(to_invariant.rows());
  for (std::size_t i = 0; i < y.size(); ++i) {
    BigInt acc = 0;
    for (std::size_t j = 0; j < x.size(); ++j) acc += to_invariant(i, j) * x[j];
    y[i] = acc;
  }
  return module.reduce(y);
}

InvolutionModule::Presented InvolutionModule::from_presentation(const std::vector<std::uint64_t>& orders,
                                                                const IntMatrix& action) {
  const std::size_t k = orders.size();
  if (action.rows() != k || action.cols() != k)
    throw ValidationError({"action matrix must be " + std::to_string(k) + "x" + std::to_string(k)});
  for (auto o : orders)
    if (o < 1) throw ValidationError({"cyclic orders must be positive"});
  if (!well_defined(orders, action)) throw ValidationError({"action does not preserve the relations of the group"});
  IntMatrix diag(k, k);
  for (std::size_t i = 0; i < k; ++i) diag(i, i) = big(orders[i]);
  const SmithForm s = smith_normal_form(diag);
  const IntMatrix u_inv = unimodular_inverse(s.left);
  const IntMatrix conj = s.left * action * u_inv;
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < k; ++i)
    if (s.diag[i] > 1) keep.push_back(i);
  std::vector<std::uint64_t> d;
  IntMatrix c(keep.size(), keep.size()), to(keep.size(), k);
  for (std::size_t a = 0; a < keep.size(); ++a) {
    d.push_back(s.diag[keep[a]].get_ui());
    for (std::size_t b = 0; b < keep.size(); ++b) c(a, b) = conj(keep[a], keep[b]);
    for (std::size_t j = 0; j < k; ++j) to(a, j) = s.left(keep[a], j);
  }
  return Presented{make(std::move(d), std::move(c)), std::move(to)};
}

IntMatrix c_minus_one(const InvolutionModule& m) { return shifted(m, -1); }
IntMatrix c_plus_one(const InvolutionModule& m) { return shifted(m, 1); }

Subgroup subgroup_generated(const InvolutionModule& m, std::vector<GroupElement> gens) {
  const std::size_t k = m.rank();
  for (auto& g : gens) g = m.reduce(std::move(g));
  if (k == 0) return Subgroup{std::move(gens), BigInt(1)};
  // M' / <gens> = Z^k / (D Z^k + G Z^m); its order is the product of the Smith invariants.
  IntMatrix a(k, k + gens.size());
  for (std::size_t i = 0; i < k; ++i) a(i, i) = big(m.invariant_factors()[i]);
  for (std::size_t j = 0; j < gens.size(); ++j)
    for (std::size_t i = 0; i < k; ++i) a(i, k + j) = gens[j][i];
  BigInt index = 1;
  for (const auto& x : smith_normal_form(a).diag) index *= x;
  return Subgroup{std::move(gens), big(m.order()) / index};
}

Subgroup subgroup_image(const InvolutionModule& m, const IntMatrix& endo) {
  if (endo.rows() != m.rank() || endo.cols() != m.rank() || !well_defined(m.invariant_factors(), endo))
    throw ContractError("endomorphism is not well defined on the group");
  std::vector<GroupElement> gens;
  for (std::size_t j = 0; j < m.rank(); ++j) {
    GroupElement col(m.rank());
    for (std::size_t i = 0; i < m.rank(); ++i) col[i] = endo(i, j);
    gens.push_back(std::move(col));
  }
  return subgroup_generated(m, std::move(gens));
}

Subgroup endo_image(const InvolutionModule& m, const IntMatrix& endo, const Subgroup& h) {
  if (!well_defined(m.invariant_factors(), endo)) throw ContractError("endomorphism is not well defined on the group");
  std::vector<GroupElement> gens;
  for (const auto& g : h.generators) gens.push_back(m.apply(endo, g));
  return subgroup_generated(m, std::move(gens));
}

Subgroup minus_part(const InvolutionModule& m) {
  const std::size_t k = m.rank();
  if (k == 0) return Subgroup{{}, BigInt(1)};
  // Integer kernel of [c + 1 | -D], projected to the first k coordinates.
  const IntMatrix cp = c_plus_one(m);
  IntMatrix a(k, 2 * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) a(i, j) = cp(i, j);
    a(i, k + i) = -big(m.invariant_factors()[i]);
  }
  const SmithForm s = smith_normal_form(a);
  std::size_t r = 0;
  while (r < s.diag.size() && s.diag[r] != 0) ++r;
  std::vector<GroupElement> gens;
  for (std::size_t col = r; col < 2 * k; ++col) {
    GroupElement g(k);
    for (std::size_t i = 0; i < k; ++i) g[i] = s.right(i, col);
    gens.push_back(std::move(g));
  }
  return subgroup_generated(m, std::move(gens));
}

Subgroup commutators(const InvolutionModule& m, const Subgroup& h) { return endo_image(m, c_minus_one(m), h); }

bool contains(const InvolutionModule& m, const Subgroup& big_group, const Subgroup& small) {
  std::vector<GroupElement> gens = big_group.generators;
  gens.insert(gens.end(), small.generators.begin(), small.generators.end());
  return subgroup_generated(m, std::move(gens)).order == big_group.order;
}

unsigned compute_e(const InvolutionModule& m, const Subgroup& comm_hab) {
  const Subgroup whole = subgroup_image(m, IntMatrix::identity(m.rank()));
  const Subgroup minus = minus_part(m);
  const Subgroup c_m = commutators(m, whole);
  const Subgroup c_minus = commutators(m, minus);
  std::vector<GroupElement> doubled;
  for (const auto& g : minus.generators) {
    GroupElement x = g;
    for (auto& v : x) v *= 2;
    doubled.push_back(std::move(x));
  }
  const Subgroup two_m = subgroup_generated(m, std::move(doubled));
  // These inclusions hold for every involution module.
  if (!contains(m, c_minus, two_m) || !contains(m, c_m, c_minus) || !contains(m, minus, c_m))
    throw TheoremCheckFailure("inclusion chain 2M'^- in [c,M'^-] in [c,M'] in M'^- fails");
  std::vector<std::string> v;
  if (!contains(m, comm_hab, c_m)) v.push_back("[c,M'] is not contained in the supplied [c,H^ab]");
  if (!contains(m, minus, comm_hab)) v.push_back("supplied [c,H^ab] is not contained in M'^-");
  if (!v.empty()) throw ValidationError(std::move(v));
  const BigInt ratio = comm_hab.order / c_m.order;
  if (ratio != 1 && ratio != 2)
    throw ValidationError({"index [[c,H^ab] : [c,M']] = " + ratio.get_str() + " is not 1 or 2"});
  return static_cast<unsigned>(ratio.get_ui());
}

DihedralDatum DihedralDatum::make(InvolutionModule mprime, const BigInt& m_order, std::vector<GroupElement> comm_hab,
                                  std::optional<unsigned> declared_e) {
  if (declared_e && *declared_e != 1 && *declared_e != 2) throw ValidationError({"e must be 1 or 2"});
  if (m_order < 1) throw ValidationError({"#M must be positive"});
  Subgroup s = subgroup_generated(mprime, std::move(comm_hab));
  const unsigned e = compute_e(mprime, s);
  std::vector<std::string> v;
  if (declared_e && *declared_e != e)
    v.push_back("declared e = " + std::to_string(*declared_e) + " but [[c,H^ab] : [c,M']] = " + std::to_string(e));
  // Restriction Hom(M) -> Hom(M')^c has kernel of order 2 and image of index e.
  const BigInt expected = 2 * big(mprime.order()) / s.order;
  if (m_order != expected)
    v.push_back("#M = " + m_order.get_str() + " but 2 #M' / #[c,H^ab] = " + expected.get_str());
  if (!v.empty()) throw ValidationError(std::move(v));
  return DihedralDatum(std::move(mprime), m_order, std::move(s), e);
}

namespace {

BigInt quarter_count(const BigInt& mprime, const BigInt& m, unsigned e) {
  const BigInt twice4 = 2 * mprime - e * m;  // 4 * (1/2)(#M' - (e/2)#M)
  if (twice4 < 0 || twice4 % 4 != 0)
    throw TheoremCheckFailure("datum inconsistent with the counting formula: (2#M' - e#M)/4 = " + twice4.get_str() +
                              "/4");
  return twice4 / 4;
}

void check_odd_ell(std::uint64_t ell) {
  if (ell == 2) throw ContractError("ell = 2 is not supported (characteristic must differ from 2)");
  if (!is_prime(ell)) throw ContractError("ell = " + std::to_string(ell) + " is not prime");
}

}  // namespace

BigInt count_dihedral_ell_adic(const DihedralDatum& d) {
  return quarter_count(big(d.mprime().order()), d.m_order(), d.e());
}

BigInt count_dihedral_mod_ell(const DihedralDatum& d, std::uint64_t ell) {
  check_odd_ell(ell);
  return quarter_count(prime_to_ell_part(big(d.mprime().order()), ell), prime_to_ell_part(d.m_order(), ell), d.e());
}

BigInt lift_fiber_size(const DihedralDatum& d, std::uint64_t ell) {
  check_odd_ell(ell);
  return ell_part(d.m_order(), ell);
}

OracleResult oracle_count(const DihedralDatum& datum, std::optional<std::uint64_t> ell, std::uint64_t cap) {
  const InvolutionModule& m = datum.mprime();
  if (ell) check_odd_ell(*ell);
  if (m.order() > cap) throw ContractError("oracle_count: #M' exceeds the enumeration cap " + std::to_string(cap));
  const std::size_t k = m.rank();
  const auto& d = m.invariant_factors();
  // chi^c has residues r'_j = sum_i r_i C[i][j] d_j / d_i (mod d_j).
  std::vector<std::vector<std::uint64_t>> t(k, std::vector<std::uint64_t>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const BigInt num = m.action()(i, j) * big(d[j]);
      t[i][j] = mod(num / big(d[i]), d[j]).get_ui();
    }
  auto allowed = [&](const std::vector<std::uint64_t>& r) {
    if (!ell) return true;
    for (std::size_t i = 0; i < k; ++i)
      if ((d[i] / std::gcd(r[i], d[i])) % *ell == 0) return false;
    return true;
  };
  std::uint64_t fixed = 0, moved = 0, total = 0;
  std::vector<std::uint64_t> r(k, 0), rc(k);
  for (std::uint64_t idx = 0; idx < m.order(); ++idx) {
    if (allowed(r)) {
      ++total;
      for (std::size_t j = 0; j < k; ++j) {
        std::uint64_t acc = 0;
        for (std::size_t i = 0; i < k; ++i) acc = (acc + r[i] * t[i][j]) % d[j];
        rc[j] = acc;
      }
      if (rc == r) ++fixed;
      else ++moved;
    }
    for (std::size_t i = 0; i < k; ++i) {
      if (++r[i] < d[i]) break;
      r[i] = 0;
    }
  }
  if (moved % 2 != 0) throw TheoremCheckFailure("oracle_count: c does not pair the moved characters");
  // Fixed characters are the characters of M'/[c,M'].
  const Subgroup c_m = commutators(m, subgroup_image(m, IntMatrix::identity(k)));
  BigInt expect_fixed = big(m.order()) / c_m.order;
  if (ell) expect_fixed = prime_to_ell_part(expect_fixed, *ell);
  if (big(fixed) != expect_fixed)
    throw TheoremCheckFailure("oracle_count: " + std::to_string(fixed) + " fixed characters but #M'/#[c,M'] = " +
                              expect_fixed.get_str());
  return OracleResult{big(moved / 2), big(fixed), big(total)};
}

DihedralDatum random_datum(std::mt19937_64& rng, std::uint64_t max_order, bool want_e2) {
  auto uniform = [&](std::uint64_t lo, std::uint64_t hi) {
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
  };
  // Invariant factors from {2..12} forming a divisor chain.
  std::vector<std::uint64_t> d;
  const std::uint64_t k = uniform(1, 4);
  std::uint64_t order = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    std::vector<std::uint64_t> options;
    for (std::uint64_t x = 2; x <= 12; ++x)
      if ((d.empty() || x % d.back() == 0) && order * x <= max_order) options.push_back(x);
    if (options.empty()) break;
    d.push_back(options[uniform(0, options.size() - 1)]);
    order *= d.back();
  }
  if (d.empty()) d.push_back(2);
  const std::size_t n = d.size();

  // Base involution: unit square roots on the diagonal and swaps of equal factors.
  IntMatrix c(n, n);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (d[i] == d[i + 1] && uniform(0, 2) == 0 && perm[i] == i && perm[i + 1] == i + 1) std::swap(perm[i], perm[i + 1]);
  for (std::size_t j = 0; j < n; ++j) {
    if (perm[j] != j) {
      c(perm[j], j) = 1;
      continue;
    }
    std::vector<std::uint64_t> roots;
    for (std::uint64_t u = 1; u < d[j]; ++u)
      if (u * u % d[j] == 1) roots.push_back(u);
    c(j, j) = big(roots[uniform(0, roots.size() - 1)]);
  }
  // Conjugate by random transvections x_i += t x_j (t a multiple of d_i / gcd(d_i, d_j)).
  for (int step = 0, steps = static_cast<int>(uniform(0, 3)); step < steps && n > 1; ++step) {
    const std::size_t i = uniform(0, n - 1);
    std::size_t j = uniform(0, n - 2);
    if (j >= i) ++j;
    const std::uint64_t unit = d[i] / std::gcd(d[i], d[j]);
    const BigInt t = big(unit * uniform(1, d[i]));
    IntMatrix p = IntMatrix::identity(n), p_inv = IntMatrix::identity(n);
    p(i, j) = t;
    p_inv(i, j) = -t;
    c = p * c * p_inv;
  }
  InvolutionModule mod_c = InvolutionModule::make(d, c);

  const Subgroup c_m = commutators(mod_c, subgroup_image(mod_c, IntMatrix::identity(n)));
  std::vector<GroupElement> comm = c_m.generators;
  if (want_e2) {
    const Subgroup minus = minus_part(mod_c);
    for (int attempt = 0; attempt < 16 && !minus.generators.empty(); ++attempt) {
      GroupElement x(n, BigInt(0));
      for (const auto& g : minus.generators) {
        const BigInt coef = big(uniform(0, 3));
        for (std::size_t i = 0; i < n; ++i) x[i] += coef * g[i];
      }
      if (!contains(mod_c, c_m, subgroup_generated(mod_c, {x}))) {
        comm.push_back(mod_c.reduce(x));
        break;
      }
    }
  }
  const BigInt m_order = 2 * big(mod_c.order()) / subgroup_generated(mod_c, comm).order;
  return DihedralDatum::make(std::move(mod_c), m_order, std::move(comm));
}

}  // namespace weilcensus
