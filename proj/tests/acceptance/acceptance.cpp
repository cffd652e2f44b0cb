// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <chrono>
#include <iomanip>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "weilcensus/cli/config.hpp"
#include "weilcensus/curve_zeta.hpp"
#include "weilcensus/dihedral_curves.hpp"
#include "weilcensus/ell_invariants.hpp"
#include "weilcensus/errors.hpp"
#include "weilcensus/power_sums.hpp"
#include "weilcensus/twist_count.hpp"

using namespace weilcensus;

namespace {

const std::string kConfigs = WEILCENSUS_CONFIG_DIR;

struct Check {
  bool ok = true;
  std::ostringstream detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail << "first failure: " << what << "; ";
    ok = ok && cond;
  }
};

int failures = 0;

void criterion(int id, const std::string& title, double budget_s, const std::function<void(Check&)>& body) {
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.ok = false;
    c.detail << "exception: " << e.what() << "; ";
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs > budget_s) {
    c.ok = false;
    c.detail << "over time budget; ";
  }
  std::cout << (c.ok ? "PASS" : "FAIL") << "  [" << id << "] " << title << "  (" << c.detail.str() << std::fixed
            << std::setprecision(2) << secs << " s of " << budget_s << " s)" << std::endl;
  failures += !c.ok;
}

CurveSpec elliptic(std::uint64_t q, std::array<std::uint64_t, 5> a) {
  CurveSpec c;
  c.q = q;
  c.weierstrass = WeierstrassModel{a};
  return c;
}

ZetaData from_weil(const BigInt& q, const IntPolynomial& ch) {
  CurveSpec c;
  c.q = q;
  c.weil_polynomial = ch;
  return zeta_data(c);
}

// Sandwich test through 100-digit floating point, independent of the exact routine.
bool float_sandwich(const BigInt& q, unsigned g, std::uint64_t n, const BigInt& count) {
  using F = boost::multiprecision::cpp_bin_float_100;
  const F root = boost::multiprecision::pow(F(q.get_str()), F(n) / 2);
  const F c(count.get_str());
  return boost::multiprecision::pow(root - 1, 2 * g) <= c && c <= boost::multiprecision::pow(root + 1, 2 * g);
}

cli::Json load(const std::string& name) { return cli::load_json_file(kConfigs + "/" + name); }

DihedralCensusInput shipped_census() {
  cli::ConfigReader reader(false);
  return reader.census(load("dihedral_synthetic_genus2.json"), {});
}

}  // namespace

int main() {
  criterion(1, "brute-force point counts equal q^n + 1 - sum alpha^n for 7 elliptic curves over F_2, F_3, F_5, all q^n <= 2^20",
            60, [](Check& c) {
              const std::vector<CurveSpec> curves = {
                  elliptic(2, {0, 0, 1, 0, 0}), elliptic(2, {1, 0, 0, 0, 1}), elliptic(2, {1, 1, 0, 0, 1}),
                  elliptic(3, {0, 0, 0, 2, 1}), elliptic(3, {0, 1, 0, 0, 2}), elliptic(5, {0, 0, 0, 1, 1}),
                  elliptic(5, {0, 0, 0, 0, 2})};
              std::size_t cells = 0;
              for (const auto& curve : curves) {
                const auto z = zeta_data(curve);
                const auto s = root_power_sums(z.weil.ch(), 64);
                BigInt qn = 1;
                for (std::uint64_t n = 1;; ++n) {
                  qn *= curve.q;
                  if (qn > (1 << 20)) break;
                  const BigInt expected = qn + 1 - s[n - 1];
                  c.require(brute_force_count(curve, n) == expected,
                            "q=" + curve.q.get_str() + " n=" + std::to_string(n));
                  c.require(curve_count(z, n) == expected, "curve_count");
                  if (qn <= 128)
                    c.require(oracle::curve_points(static_cast<int>(curve.q.get_si()), static_cast<int>(n),
                                                   {static_cast<int>(curve.weierstrass->a[4]), static_cast<int>(curve.weierstrass->a[3]),
                                                    static_cast<int>(curve.weierstrass->a[1]), 1},
                                                   {static_cast<int>(curve.weierstrass->a[2]), static_cast<int>(curve.weierstrass->a[0])}) == expected,
                              "double-loop oracle");
                  ++cells;
                }
              }
              c.detail << curves.size() << " curves, " << cells << " (curve, n) cells; ";
            });

  criterion(2, "l-power torsion law on a grid of (curve, ell) pairs, n <= 48, 3+ steps past empirical j_ell", 120, [](Check& c) {
    const std::vector<std::pair<BigInt, IntPolynomial>> curves = {
        {2, {2, 0, 1}}, {2, {2, 2, 1}}, {3, {3, 3, 1}}, {5, {5, 4, 1}}, {3, {9, 9, 7, 3, 1}}, {2, {4, -4, 4, -2, 1}}};
    int pairs = 0;
    for (const auto& [q, ch] : curves) {
      const auto w = WeilPolynomial::validate(q, ch);
      for (std::uint64_t ell : {3u, 5u, 7u, 11u}) {
        if (q % ell == 0) continue;
        const auto rep = verify_torsion_proposition(w, ell, 48);
        const std::string tag = "q=" + q.get_str() + " ch=" + ch.to_string() + " ell=" + std::to_string(ell);
        c.require(rep.passed && rep.checks.size() == 48, tag);
        const auto& inv = rep.invariants;
        for (const auto& [d, v] : inv.valuations) {
          c.require(v.size() >= inv.j_ell + 4, tag + " table too short");
          for (std::uint64_t j = inv.j_ell; j < inv.j_ell + 3 && j + 1 < v.size(); ++j) {
            const BigInt lhs = inv.N(d, j + 1);
            const BigInt rhs = power(BigInt(ell), inv.g_of_d.at(d)) * inv.N(d, j);
            c.require(lhs == rhs, tag + " law at d=" + std::to_string(d));
            const BigInt n = BigInt(static_cast<unsigned long>(d)) * power(BigInt(ell), static_cast<unsigned long>(j + 1));
            if (n <= 2000) c.require(lhs == oracle::ell_part(point_count(w, n.get_ui()), ell), tag + " table vs direct count");
          }
        }
        for (const auto& chk : rep.checks)
          c.require(chk.actual == oracle::ell_part(oracle::abelian_count(ch, chk.n), ell) || chk.n > 24, tag + " Sylvester");
        ++pairs;
      }
    }
    c.require(pairs >= 12, "grid size");
    c.detail << pairs << " pairs; ";
  });

  criterion(3, "twist-class formula equals exhaustive character enumeration on 600 random data (#M' <= 10^4), ell in {3,5}",
            120, [](Check& c) {
              std::mt19937_64 rng(20240611);
              int e2 = 0, witnesses = 0;
              BigInt largest = 0;
              for (int t = 0; t < 600; ++t) {
                const auto d = random_datum(rng, 10000, t % 3 == 0);
                const auto& m = d.mprime();
                e2 += d.e() == 2;
                largest = std::max(largest, BigInt(static_cast<unsigned long>(m.order())));
                std::vector<std::vector<long>> rows(m.rank(), std::vector<long>(m.rank()));
                for (std::size_t i = 0; i < m.rank(); ++i)
                  for (std::size_t j = 0; j < m.rank(); ++j) rows[i][j] = m.action()(i, j).get_si();
                const BigInt adic = count_dihedral_ell_adic(d);
                c.require(oracle_count(d).pairs == adic, "library oracle, ell-adic");
                c.require(BigInt(static_cast<unsigned long>(oracle::character_pairs(m.invariant_factors(), rows))) == adic,
                          "independent enumeration, ell-adic");
                for (std::uint64_t ell : {3u, 5u}) {
                  const BigInt mod = count_dihedral_mod_ell(d, ell);
                  c.require(oracle_count(d, ell).pairs == mod, "library oracle, mod ell");
                  c.require(BigInt(static_cast<unsigned long>(oracle::character_pairs(m.invariant_factors(), rows, ell))) == mod,
                            "independent enumeration, mod ell");
                  c.require(mod <= adic, "mod <= adic");
                  witnesses += adic != lift_fiber_size(d, ell) * mod;
                }
              }
              // e = 2 family from Z/2^k with c = -1 and [c, H^ab] = M'
              for (std::uint64_t k = 2; k <= 10; ++k) {
                IntMatrix minus_one(1, 1);
                minus_one(0, 0) = -1;
                const auto m = InvolutionModule::make({std::uint64_t{1} << k}, minus_one);
                const auto d = DihedralDatum::make(m, 2, {GroupElement{1}});
                c.require(d.e() == 2, "Z/2^k family has e = 2");
                c.require(oracle_count(d).pairs == count_dihedral_ell_adic(d), "Z/2^k family");
                for (std::uint64_t ell : {3u, 5u}) c.require(oracle_count(d, ell).pairs == count_dihedral_mod_ell(d, ell), "Z/2^k mod ell");
                ++e2;
              }
              c.require(witnesses > 0, "fiber-factor witness");
              c.detail << "e=2 data " << e2 << ", largest #M' " << largest << ", fiber-factor witnesses " << witnesses << "; ";
            });

  criterion(4, "shipped genus-2 census equals direct sums for n <= 24; n = 2 gives (90, 10); strict inequality", 60,
            [](Check& c) {
              const auto in = shipped_census();
              int strict = 0;
              const auto rows = census_series(in, 3, 24);
              for (const auto& r : rows) {
                Rational adic = 0, mod = 0;
                for (const auto& b : in.betas()) {
                  if (r.n % b.n_beta) continue;
                  const BigInt pic1 = oracle::abelian_count(b.cover_weil.ch(), r.n / b.n_beta);
                  const BigInt pic = oracle::abelian_count(in.base().weil.ch(), r.n);
                  adic += oracle::frac(1, 2) * (Rational(pic1) - oracle::frac(b.e_beta, 2) * Rational(pic));
                  mod += oracle::frac(1, 2) * (Rational(pic1 / oracle::ell_part(pic1, 3)) -
                                           oracle::frac(b.e_beta, 2) * Rational(pic / oracle::ell_part(pic, 3)));
                }
                c.require(Rational(r.count_ell_adic) == adic, "ell-adic n=" + std::to_string(r.n));
                c.require(Rational(r.count_mod_ell) == mod, "mod-3 n=" + std::to_string(r.n));
                strict += r.count_mod_ell < r.count_ell_adic;
              }
              c.require(rows.size() == 24 && rows[1].count_ell_adic == 90 && rows[1].count_mod_ell == 10, "n = 2 row");
              c.require(strict >= 4, "strict inequalities");
              c.detail << "strict at " << strict << " of 24 n; ";
            });

  criterion(5, "every Picard order of every shipped input lies in the Weil sandwich", 60, [](Check& c) {
    std::size_t checked = 0;
    auto check = [&](const BigInt& q, unsigned g, std::uint64_t n, const BigInt& count, const std::string& tag) {
      c.require(within_weil_bounds(q, g, n, count), tag + " exact");
      c.require(float_sandwich(q, g, n, count), tag + " 100-digit");
      ++checked;
    };
    cli::ConfigReader reader(false);
    for (const auto* name : {"zeta_elliptic_f2.json", "zeta_genus2_f3.json", "zeta_genus2_counts.json"}) {
      const auto z = zeta_data(reader.curve(load(name).at("curve"), "curve"));
      for (std::uint64_t n = 1; n <= 48; ++n) check(z.q, z.genus, n, jacobian_count(z, n), name);
    }
    const auto t = reader.weil(load("torsion_elliptic_f2.json").at("weil"), "weil");
    for (std::uint64_t n = 1; n <= 48; ++n) check(t.q(), t.dimension(), n, point_count(t, n), "torsion");
    const auto in = shipped_census();
    for (std::uint64_t n = 1; n <= 48; ++n) {
      check(in.base().q, in.base().genus, n, jacobian_count(in.base(), n), "census base");
      for (const auto& b : in.betas())
        if (n % b.n_beta == 0) check(in.base().q, 2 * in.base().genus - 1, n, cover_picard_count(b, n), "cover " + b.label);
    }
    c.detail << checked << " orders; ";
  });

  criterion(6, "recurrence recovery, prefix determinacy, Lefschetz shape, no fit on the mod-3 census", 30, [](Check& c) {
    const auto w = WeilPolynomial::validate(2, {2, 0, 1});
    const auto counts = point_count_sequence(w, 24);
    const std::vector<Rational> seq(counts.begin(), counts.end());
    const auto fit = fit_recurrence(seq);
    c.require(fit.fits(), "fit");
    if (fit.fits()) {
      const auto& f = *fit.formula;
      c.require(f.min_poly == IntPolynomial({-1, 1}) * IntPolynomial({-2, 1}) * IntPolynomial({2, 0, 1}), "min_poly");
      for (std::size_t n = 1; n <= 24; ++n) c.require(evaluate(f, n) == seq[n - 1], "reproduction");
      c.require(f.k == 4 && prefix_determinacy_check(f, std::vector<Rational>(seq.begin(), seq.begin() + 8)), "prefix 2k = 8");
    }
    std::vector<Rational> shape;
    for (unsigned long n = 1; n <= 16; ++n) shape.emplace_back(power(BigInt(2), 5 * n) + 2 * power(BigInt(2), n));
    const auto lef = detect_lefschetz(shape, 2, 2);
    c.require(lef.fits && lef.drinfeld_shape, "drinfeld shape");
    const auto in = shipped_census();
    std::vector<Rational> stripped;
    for (std::uint64_t n = 1; n <= 100; ++n) stripped.emplace_back(census_mod_ell(in, 3, n));
    const auto sr = detect_lefschetz(stripped, 2, 2);
    c.require(!sr.fits, "mod-3 census must not fit");
    c.detail << "mod-3 census: " << sr.reason << "; ";
  });

  criterion(7, "ratio probe: v_3 affine along n = 2*3^k, eventually constant along j = 0", 30, [](Check& c) {
    const auto in = shipped_census();
    const auto tower = asymptotic_ratio_probe(in, 3, {2, 6, 18, 54});
    c.require(tower.pattern == ProbePattern::EllPowerTower && tower.holds, "tower");
    std::vector<long> v;
    for (const auto& r : tower.rows) {
      c.require(r.v_ratio.has_value(), "tower row defined");
      if (r.v_ratio) v.push_back(*r.v_ratio);
    }
    if (v.size() == 4) c.require(v[1] - v[0] == v[2] - v[1] && v[2] - v[1] == v[3] - v[2], "affine check");
    const auto fixed = asymptotic_ratio_probe(in, 3, {2, 4, 8, 10, 14});
    c.require(fixed.pattern == ProbePattern::FixedJ && fixed.holds, "fixed j");
    std::ostringstream vs;
    for (long x : v) vs << x << ' ';
    c.detail << "tower v_3 = " << vs.str() << "; ";
  });

  criterion(8, "deformation dimension, label capacity, fully split cover count", 10, [](Check& c) {
    c.require(deformation_dimension(2, 2) == 6, "dimension");
    const auto in = shipped_census();
    std::vector<BetaRecord> betas(15, in.betas().front());
    c.require(DihedralCensusInput::make(in.base(), betas).betas().size() == 15, "15 labels accepted");
    betas.push_back(betas.front());
    bool rejected = false;
    try {
      DihedralCensusInput::make(in.base(), betas);
    } catch (const ValidationError&) {
      rejected = true;
    }
    c.require(rejected, "16 labels rejected");
    const auto w = WeilPolynomial::validate(3, IntPolynomial{3, 0, 1} * IntPolynomial{3, 2, 1});
    const FpPoly lin(2, {1, 1});
    const auto m = TwoTorsionModule::make(w, {lin, lin, lin, lin});
    c.require(cover_count(m, 1) == 15, "cover count 2^{2g} - 1");
  });

  return failures ? 1 : 0;
}
