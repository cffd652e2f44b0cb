#include "weilcensus/cli/commands.hpp"

#include <iomanip>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "weilcensus/ell_invariants.hpp"
#include "weilcensus/errors.hpp"
#include "weilcensus/power_sums.hpp"

namespace weilcensus::cli {

namespace {

std::string str(const BigInt& x) { return x.get_str(); }
std::string str(std::uint64_t x) { return std::to_string(x); }
std::string str(const Rational& x) { return to_string(x); }

std::string numeric(long double x) {
  std::ostringstream s;
  s << std::setprecision(15) << x;
  return s.str();
}

EnumerationOptions enumeration(const Options& opt) {
  EnumerationOptions e;
  e.cap = opt.enum_cap;
  return e;
}

std::uint64_t require_ell(const Json& doc, const Options& opt, ConfigReader& reader) {
  if (opt.ell) return *opt.ell;
  if (doc.contains("ell")) return reader.small(doc["ell"], "ell");
  throw ContractError("ell is required (--ell or config key 'ell')");
}

std::uint64_t n_max_of(const Json& doc, const Options& opt, ConfigReader& reader, std::uint64_t fallback) {
  if (opt.n_max) return *opt.n_max;
  if (doc.contains("n_max")) return reader.small(doc["n_max"], "n_max");
  return fallback;
}

std::string flag(bool ok) { return ok ? "PASS" : "FAIL"; }

}  // namespace

CommandResult cmd_zeta(const Json& doc, const Options& opt, ConfigReader& reader) {
  reader.check_keys(doc, {"curve", "n_max"}, "config");
  if (!doc.contains("curve")) throw ContractError("config: needs 'curve'");
  const CurveSpec spec = reader.curve(doc["curve"], "curve");
  const ZetaData z = zeta_data(spec, enumeration(opt));
  const std::uint64_t n_max = n_max_of(doc, opt, reader, std::max<std::uint64_t>(z.genus, 6));
  if (n_max < 1) throw ContractError("n_max must be >= 1");

  CommandResult res;
  Report& r = res.report;
  r.command = "zeta";
  r.add("q", str(z.q));
  r.add("genus", std::to_string(z.genus));
  r.add("ch", z.weil.ch().to_string('T'));
  r.add("l_polynomial", l_polynomial(z.weil).to_string('T'));

  const bool has_model = spec.weierstrass || spec.hyperelliptic;
  Table t{"point_counts", {"n", "curve_points", "jacobian_order", "enumerated", "weil_bounds"}, {}};
  bool ok = true;
  BigInt qn = 1;
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    qn *= z.q;
    const BigInt points = curve_count(z, n);
    const BigInt jac = jacobian_count(z, n);
    std::string enumerated = "-";
    if (has_model && qn <= BigInt(str(opt.enum_cap))) {
      const BigInt brute = brute_force_count(spec, n, enumeration(opt));
      enumerated = str(brute);
      ok = ok && brute == points;
    }
    const bool bounds = within_weil_bounds(z.q, z.genus, n, jac);
    ok = ok && bounds;
    t.rows.push_back({str(n), str(points), str(jac), enumerated, flag(bounds)});
  }
  r.tables.push_back(std::move(t));
  r.add("consistency", flag(ok));
  if (!ok) res.exit_code = kExitTheorem;
  return res;
}

CommandResult cmd_torsion(const Json& doc, const Options& opt, ConfigReader& reader) {
  reader.check_keys(doc, {"weil", "curve", "ell", "n_max", "safety"}, "config");
  const std::uint64_t ell = require_ell(doc, opt, reader);
  const std::uint64_t n_max = n_max_of(doc, opt, reader, 48);
  const unsigned safety =
      doc.contains("safety") ? static_cast<unsigned>(reader.small(doc["safety"], "safety")) : kDefaultSafety;
  std::optional<WeilPolynomial> a;
  if (doc.contains("weil")) a = reader.weil(doc["weil"], "weil");
  else if (doc.contains("curve")) a = zeta_data(reader.curve(doc["curve"], "curve"), enumeration(opt)).weil;
  else throw ContractError("config: needs 'weil' or 'curve'");

  const TorsionReport rep = verify_torsion_proposition(*a, ell, n_max, safety);
  const EllInvariants& inv = rep.invariants;
  CommandResult res;
  Report& r = res.report;
  r.command = "torsion";
  r.add("q", str(a->q()));
  r.add("ch", a->ch().to_string('T'));
  r.add("ell", str(ell));
  r.add("h_ell", str(inv.h_ell));
  r.add("empirical_j_ell", str(inv.j_ell));
  r.add("safety", std::to_string(inv.safety));
  r.add("n_max", str(n_max));
  r.add("stabilization_law", flag(rep.stabilization_holds));
  r.add("result", flag(rep.passed));

  Table g{"g_of_d", {"d", "g_d"}, {}};
  for (const auto& [d, gd] : inv.g_of_d) g.rows.push_back({str(d), std::to_string(gd)});
  Table n{"n_table", {"ell", "d", "j", "N", "increment"}, {}};
  for (const auto& [d, vs] : inv.valuations)
    for (std::size_t j = 0; j < vs.size(); ++j)
      n.rows.push_back({str(ell), str(d), std::to_string(j), str(inv.N(d, j)),
                        j == 0 ? "-" : std::to_string(vs[j] - vs[j - 1])});
  Table c{"checks", {"n", "d", "j", "expected", "actual", "pass"}, {}};
  for (const auto& chk : rep.checks)
    c.rows.push_back({str(chk.n), str(chk.d), str(chk.j), str(chk.expected), str(chk.actual), flag(chk.pass)});
  r.tables = {std::move(g), std::move(n), std::move(c)};
  if (!rep.passed) res.exit_code = kExitTheorem;
  return res;
}

CommandResult cmd_dihedral(const Json& doc, const Options& opt, ConfigReader& reader) {
  reader.check_keys(doc, {"curve", "betas", "two_torsion", "ell", "n_max", "probe"}, "config");
  const std::uint64_t ell = require_ell(doc, opt, reader);
  const std::uint64_t n_max = n_max_of(doc, opt, reader, 12);
  const DihedralCensusInput in = reader.census(doc, enumeration(opt));
  const auto& base = in.base();

  CommandResult res;
  Report& r = res.report;
  r.command = "dihedral";
  r.add("q", str(base.q));
  r.add("genus", std::to_string(base.genus));
  r.add("ch", base.weil.ch().to_string('T'));
  r.add("betas", std::to_string(in.betas().size()));
  r.add("ell", str(ell));

  const auto rows = census_series(in, ell, n_max);
  Table t{"census", {"n", "d", "j", "T_dihedral_ell_adic", "T_dihedral_mod_ell", "ratio", "ratio_v_ell"}, {}};
  std::size_t strict = 0;
  bool bounds = true;
  for (const auto& row : rows) {
    if (row.count_mod_ell < row.count_ell_adic) ++strict;
    t.rows.push_back({str(row.n), str(row.d), str(row.j), str(row.count_ell_adic), str(row.count_mod_ell),
                      row.ratio ? str(*row.ratio) : "undefined",
                      row.ratio ? std::to_string(v_ell(*row.ratio, ell)) : "undefined"});
    bounds = bounds && within_weil_bounds(base.q, base.genus, row.n, point_count(base.weil, row.n));
    for (const auto& b : in.betas())
      if (row.n % b.n_beta == 0)
        bounds = bounds && within_weil_bounds(b.cover_weil.q(), b.cover_weil.dimension(), row.n / b.n_beta,
                                              cover_picard_count(b, row.n));
  }
  r.tables.push_back(std::move(t));
  r.add("strict_inequalities", std::to_string(strict));
  r.add("weil_bounds", flag(bounds));
  bool ok = bounds;

  const LeadingCoefficients lc = leading_coefficients(in);
  Table l{"leading_coefficients", {"d", "C_d"}, {}};
  for (const auto& [d, c] : lc.c_of_d) l.rows.push_back({str(d), str(c)});
  r.tables.push_back(std::move(l));
  r.add("n_B", str(lc.n_b));
  r.add("C_1_zero", lc.c1_zero ? "true" : "false");

  if (doc.contains("probe")) {
    if (!doc["probe"].is_array()) throw ContractError("probe: expected a list of n sequences");
    for (std::size_t i = 0; i < doc["probe"].size(); ++i) {
      std::vector<std::uint64_t> seq;
      for (const auto& x : reader.integers(doc["probe"][i], "probe[" + std::to_string(i) + "]"))
        seq.push_back(x.get_ui());
      const ProbeReport p = asymptotic_ratio_probe(in, ell, seq);
      const std::string name = "probe_" + std::to_string(i + 1);
      Table pt{name, {"n", "j", "ratio", "ratio_v_ell"}, {}};
      for (const auto& row : p.rows)
        pt.rows.push_back({str(row.n), str(row.j), row.ratio ? str(*row.ratio) : "undefined",
                           row.v_ratio ? std::to_string(*row.v_ratio) : "undefined"});
      r.tables.push_back(std::move(pt));
      const char* pattern = p.pattern == ProbePattern::FixedJ          ? "fixed-j"
                            : p.pattern == ProbePattern::EllPowerTower ? "ell-power tower"
                                                                       : "unclassified";
      r.add(name, std::string(pattern) + ", " + (p.pattern == ProbePattern::FixedJ ? "eventually constant: "
                                                 : p.pattern == ProbePattern::EllPowerTower ? "affine in k: "
                                                                                              : "") +
                      (p.pattern == ProbePattern::Unclassified ? "no assertion" : (p.holds ? "yes" : "no")) +
                      (p.slope ? ", slope " + str(*p.slope) : ""));
      ok = ok && p.holds;
    }
  }
  if (auto mod2 = reader.two_torsion(doc, base.weil)) {
    Table ct{"cover_count", {"n", "covers"}, {}};
    for (std::uint64_t n = 1; n <= n_max; ++n) ct.rows.push_back({str(n), str(cover_count(*mod2, n))});
    r.tables.push_back(std::move(ct));
  }
  r.add("consistency", flag(ok));
  if (!ok) res.exit_code = kExitTheorem;
  return res;
}

CommandResult cmd_twistcount(const Json& doc, const Options& opt, ConfigReader& reader) {
  reader.check_keys(doc, {"data", "random", "ell"}, "config");
  std::vector<std::uint64_t> ells;
  if (opt.ell) ells = {*opt.ell};
  else if (doc.contains("ell")) {
    if (doc["ell"].is_array())
      for (const auto& x : reader.integers(doc["ell"], "ell")) ells.push_back(x.get_ui());
    else ells = {reader.small(doc["ell"], "ell")};
  } else ells = {3};

  std::vector<std::pair<std::string, DihedralDatum>> data;
  if (doc.contains("data")) {
    if (!doc["data"].is_array()) throw ContractError("data: expected a list of data");
    for (std::size_t i = 0; i < doc["data"].size(); ++i) {
      const Json& d = doc["data"][i];
      const std::string label = d.contains("label") ? d["label"].get<std::string>() : "datum" + std::to_string(i + 1);
      data.emplace_back(label, reader.datum(d, "data[" + std::to_string(i) + "]"));
    }
  }
  if (doc.contains("random")) {
    const Json& rnd = doc["random"];
    reader.check_keys(rnd, {"count", "max_order", "e2_every"}, "random");
    const std::uint64_t count = rnd.contains("count") ? reader.small(rnd["count"], "random.count") : 100;
    const std::uint64_t max_order = rnd.contains("max_order") ? reader.small(rnd["max_order"], "random.max_order") : 10000;
    const std::uint64_t every = rnd.contains("e2_every") ? reader.small(rnd["e2_every"], "random.e2_every") : 3;
    std::mt19937_64 rng(opt.seed);
    for (std::uint64_t i = 0; i < count; ++i)
      data.emplace_back("random" + std::to_string(i + 1), random_datum(rng, max_order, every && i % every == 0));
  }

  CommandResult res;
  Report& r = res.report;
  r.command = "twistcount";
  Table t{"data",
          {"label", "order_Mprime", "order_M", "e", "ell_adic", "oracle_ell_adic", "ell", "mod_ell", "oracle_mod_ell",
           "lift_fiber", "agree"},
          {}};
  bool all = true;
  std::size_t witnesses = 0;
  for (const auto& [label, d] : data) {
    const BigInt formula = count_dihedral_ell_adic(d);
    const BigInt oracle = oracle_count(d).pairs;
    for (auto ell : ells) {
      const BigInt mod = count_dihedral_mod_ell(d, ell);
      const BigInt oracle_mod = oracle_count(d, ell).pairs;
      const BigInt fiber = lift_fiber_size(d, ell);
      const bool agree = formula == oracle && mod == oracle_mod;
      all = all && agree;
      if (formula != fiber * mod) ++witnesses;
      t.rows.push_back({label, str(d.mprime().order()), str(d.m_order()), std::to_string(d.e()), str(formula),
                        str(oracle), str(ell), str(mod), str(oracle_mod), str(fiber), agree ? "yes" : "no"});
    }
  }
  r.tables.push_back(std::move(t));
  r.add("data", std::to_string(data.size()));
  r.add("formula_equals_oracle", flag(all));
  r.add("fiber_factor_mismatches", std::to_string(witnesses));
  if (!all) res.exit_code = kExitTheorem;
  return res;
}

CommandResult cmd_recfit(const std::vector<Rational>& seq, const Options& opt) {
  CommandResult res;
  Report& r = res.report;
  r.command = "recfit";
  r.add("terms", std::to_string(seq.size()));
  const FitResult fit = fit_recurrence(seq);
  r.add("fits", fit.fits() ? "true" : "false");
  r.add("linear_complexity", std::to_string(fit.linear_complexity));
  if (!fit.fits()) {
    r.add("reason", fit.reason);
    return res;
  }
  const PowerSumFormula& f = *fit.formula;
  r.add("k", std::to_string(f.k));
  r.add("min_poly", f.min_poly.to_string('X'));
  if (seq.size() >= 2 * f.k) r.add("prefix_determinacy", flag(prefix_determinacy_check(f, seq)));
  Table terms{"terms", {"factor", "coefficients"}, {}};
  for (const auto& term : f.terms) {
    std::string coeffs;
    for (std::size_t i = 0; i < term.coeffs.size(); ++i) coeffs += (i ? " " : "") + str(term.coeffs[i]);
    terms.rows.push_back({term.factor.to_string('X'), coeffs});
  }
  r.tables.push_back(std::move(terms));
  if (opt.q && opt.g) {
    const LefschetzReport rep = detect_lefschetz(seq, parse_integer(*opt.q), *opt.g);
    r.add("drinfeld_shape", rep.drinfeld_shape ? "true" : "false");
    r.add("leading_root", rep.leading_root);
    if (!rep.reason.empty()) r.add("reason", rep.reason);
    r.add("weight_tolerance", numeric(rep.tolerance) + " relative (not derivable from exact data)");
    Table w{"weights", {"factor", "root", "modulus", "weight"}, {}};
    for (const auto& e : rep.weight_table)
      w.rows.push_back({e.factor.to_string('X'), e.root, numeric(e.modulus), e.weight ? std::to_string(*e.weight) : "none"});
    r.tables.push_back(std::move(w));
  }
  return res;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact census computations for curves and abelian varieties over finite fields", "weil-census"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  std::uint64_t ell = 0, n_max = 0;
  std::string format = "table", q;
  unsigned g = 0;
  app.add_option("--ell", ell, "prime ell");
  app.add_option("--nmax", n_max, "largest n");
  app.add_option("--enum-cap", opt.enum_cap, "largest field size enumerated by brute force")->capture_default_str();
  app.add_option("--format", format, "table, csv or json")->capture_default_str();
  app.add_flag("--strict", opt.strict, "reject unknown config keys");
  app.add_option("--seed", opt.seed, "seed for randomly generated data")->capture_default_str();

  std::string path;
  std::vector<CLI::App*> config_cmds;
  for (const auto& [name, help] : std::vector<std::pair<std::string, std::string>>{
           {"zeta", "zeta function and point counts of a curve"},
           {"torsion", "ell-power torsion invariants and their verification"},
           {"dihedral", "dihedral census series, leading coefficients and ratio probes"},
           {"twistcount", "twist-class counts of abstract data against exhaustive enumeration"}}) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("config", path, "JSON config file")->required();
    config_cmds.push_back(sub);
  }
  auto* recfit = app.add_subcommand("recfit", "recurrence fit and Lefschetz-shape report of a sequence file");
  recfit->add_option("sequence", path, "file with one integer per line")->required();
  recfit->add_option("--q", q, "field size for the weight table");
  recfit->add_option("--g", g, "genus for the weight window");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << '\n';
    return kExitContract;
  }
  if (app.count("--ell")) opt.ell = ell;
  if (app.count("--nmax")) opt.n_max = n_max;
  if (recfit->count("--q")) opt.q = q;
  if (recfit->count("--g")) opt.g = g;

  try {
    opt.format = parse_format(format);
    ConfigReader reader(opt.strict);
    CommandResult res;
    if (recfit->parsed()) {
      res = cmd_recfit(load_sequence_file(path), opt);
    } else {
      const Json doc = load_json_file(path);
      if (config_cmds[0]->parsed()) res = cmd_zeta(doc, opt, reader);
      else if (config_cmds[1]->parsed()) res = cmd_torsion(doc, opt, reader);
      else if (config_cmds[2]->parsed()) res = cmd_dihedral(doc, opt, reader);
      else res = cmd_twistcount(doc, opt, reader);
    }
    res.report.warnings = reader.warnings();
    for (const auto& w : reader.warnings()) err << "warning: " << w << '\n';
    render(res.report, opt.format, out);
    return res.exit_code;
  } catch (const TheoremCheckFailure& e) {
    err << "theorem check failed: " << e.what() << '\n';
    return kExitTheorem;
  } catch (const ValidationError& e) {
    err << "invalid input:\n";
    for (const auto& v : e.violations()) err << "  - " << v << '\n';
    return kExitContract;
  } catch (const ContractError& e) {
    err << "error: " << e.what() << '\n';
    return kExitContract;
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed config: " << e.what() << '\n';
    return kExitContract;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitTheorem;
  }
}

}  // namespace weilcensus::cli
