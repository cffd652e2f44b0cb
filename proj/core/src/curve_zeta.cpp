#include "weilcensus/curve_zeta.hpp"

#include <atomic>

#include "weilcensus/errors.hpp"
#include "weilcensus/parallel.hpp"

namespace weilcensus {

namespace {

using Elt = FiniteField::Element;
using FqPoly = std::vector<Elt>;  // ascending, trimmed

void trim(FqPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const FqPoly& a) { return static_cast<int>(a.size()) - 1; }

FqPoly add(const FiniteField& k, const FqPoly& a, const FqPoly& b) {
  FqPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = k.add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  trim(r);
  return r;
}

FqPoly mul(const FiniteField& k, const FqPoly& a, const FqPoly& b) {
  if (a.empty() || b.empty()) return {};
  FqPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = k.add(r[i + j], k.mul(a[i], b[j]));
  trim(r);
  return r;
}

FqPoly scale(const FiniteField& k, const FqPoly& a, Elt c) {
  FqPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = k.mul(a[i], c);
  trim(r);
  return r;
}

FqPoly derivative(const FiniteField& k, const FqPoly& a) {
  FqPoly r;
  for (std::size_t i = 1; i < a.size(); ++i)
    r.push_back(k.mul(a[i], static_cast<Elt>(i % k.characteristic())));
  trim(r);
  return r;
}

FqPoly rem(const FiniteField& k, FqPoly a, const FqPoly& b) {
  const Elt lead_inv = k.inv(b.back());
  while (deg(a) >= deg(b)) {
    const Elt c = k.mul(a.back(), lead_inv);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = k.sub(a[shift + i], k.mul(c, b[i]));
    trim(a);
  }
  return a;
}

int gcd_degree(const FiniteField& k, FqPoly a, FqPoly b) {
  while (!b.empty()) {
    FqPoly r = rem(k, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return deg(a);
}

Elt eval(const FiniteField& k, const FqPoly& a, Elt x) {
  Elt r = 0;
  for (std::size_t i = a.size(); i-- > 0;) r = k.add(k.mul(r, x), a[i]);
  return r;
}

std::pair<std::uint64_t, unsigned> field_shape(const BigInt& q) {
  const auto [p, a] = prime_power_decomposition(q);
  if (p == 0 || q < 2) throw ContractError("q = " + q.get_str() + " is not a prime power");
  return {p, a};
}

FqPoly to_fq(const BigInt& q, const std::vector<std::uint64_t>& c, const char* name) {
  FqPoly r;
  for (auto v : c) {
    if (BigInt(std::to_string(v)) >= q)
      throw ContractError(std::string("coefficient of ") + name + " is not a field element encoding");
    r.push_back(static_cast<Elt>(v));
  }
  trim(r);
  return r;
}

const HyperellipticModel& model_of(const CurveSpec& c, HyperellipticModel& storage) {
  if (c.weierstrass && c.hyperelliptic) throw ContractError("curve spec carries two models");
  if (c.weierstrass) {
    storage = to_hyperelliptic(*c.weierstrass);
    return storage;
  }
  if (c.hyperelliptic) return *c.hyperelliptic;
  throw ContractError("brute_force_count: curve spec has no model");
}

std::uint64_t checked_power(std::uint64_t q, std::uint64_t n, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    if (r > cap / q) return cap + 1;
    r *= q;
  }
  return r;
}

}  // namespace

FiniteField make_field(std::uint64_t p, unsigned a) { return FiniteField::make(p, a); }

HyperellipticModel to_hyperelliptic(const WeierstrassModel& w) {
  // y^2 + (a1 x + a3) y = x^3 + a2 x^2 + a4 x + a6
  return HyperellipticModel{{w.a[4], w.a[3], w.a[1], 1}, {w.a[2], w.a[0]}};
}

unsigned model_genus(const BigInt& q, const HyperellipticModel& m) {
  const auto [p, a] = field_shape(q);
  const FiniteField k = make_field(p, a);
  const FqPoly f = to_fq(q, m.f, "f"), h = to_fq(q, m.h, "h");
  const int d = std::max(h.empty() ? -1 : 2 * deg(h), deg(f));
  if (d < 3) throw ValidationError({"model has genus 0 (max(2 deg h, deg f) < 3)"});
  std::vector<std::string> v;
  if (p != 2) {
    // y -> y - h/2 gives y^2 = h^2 + 4f.
    const FqPoly big = add(k, mul(k, h, h), scale(k, f, 4 % p));
    if (deg(big) != d) v.push_back("leading terms of h^2 and 4f cancel; model is not in normal form");
    else if (gcd_degree(k, big, derivative(k, big)) > 0)
      v.push_back("h^2 + 4f is not squarefree; the curve is singular");
  } else {
    if (h.empty()) v.push_back("h = 0 in characteristic 2; the curve is singular");
    else {
      if (d % 2 == 0 && 2 * deg(h) != d) v.push_back("deg h < d/2 with d even; singular at infinity");
      const FqPoly fd = derivative(k, f), hd = derivative(k, h);
      const FqPoly test = add(k, mul(k, fd, fd), mul(k, mul(k, hd, hd), f));
      if (gcd_degree(k, h, test) > 0) v.push_back("h and f'^2 + h'^2 f share a root; the curve is singular");
    }
  }
  if (!v.empty()) throw ValidationError(std::move(v));
  return static_cast<unsigned>((d + 1) / 2 - 1);
}

BigInt brute_force_count(const CurveSpec& c, std::uint64_t n, const EnumerationOptions& opt) {
  if (n < 1) throw ContractError("brute_force_count: n must be >= 1");
  HyperellipticModel storage;
  const HyperellipticModel& m = model_of(c, storage);
  const auto [p, a] = field_shape(c.q);
  const std::uint64_t size = checked_power(c.q.get_ui(), n, opt.cap);
  if (c.q > BigInt(std::to_string(opt.cap)) || size > opt.cap)
    throw ContractError("brute_force_count: q^n exceeds the enumeration cap " + std::to_string(opt.cap));
  model_genus(c.q, m);

  const FiniteField base = make_field(p, a);
  const FiniteField k = make_field(p, static_cast<unsigned>(a * n));

  // Image of the base-field generator inside the extension.
  Elt gen = 0;
  if (a > 1) {
    FqPoly mod;
    for (auto co : base.modulus().coeffs()) mod.push_back(static_cast<Elt>(co));
    bool found = false;
    for (std::uint64_t y = 0; y < size && !found; ++y)
      if (eval(k, mod, static_cast<Elt>(y)) == 0) {
        gen = static_cast<Elt>(y);
        found = true;
      }
    if (!found) throw TheoremCheckFailure("brute_force_count: base field does not embed");
  }
  auto embed = [&](std::uint64_t e) -> Elt {
    if (a == 1) return static_cast<Elt>(e);
    Elt r = 0, pw = 1;
    for (auto dgt : base.digits(static_cast<Elt>(e))) {
      r = k.add(r, k.mul(static_cast<Elt>(dgt), pw));
      pw = k.mul(pw, gen);
    }
    return r;
  };
  FqPoly f, h;
  for (auto co : m.f) f.push_back(embed(co));
  for (auto co : m.h) h.push_back(embed(co));
  trim(f);
  trim(h);

  // table[z]: odd p, z is a nonzero square; p = 2, z = w^2 + w for some w.
  std::vector<std::uint8_t> table(size, 0);
  for (std::uint64_t w = 0; w < size; ++w) {
    const Elt we = static_cast<Elt>(w);
    const Elt z = p == 2 ? k.add(k.mul(we, we), we) : k.mul(we, we);
    table[z] = 1;
  }

  const Elt four = static_cast<Elt>(4 % p);
  auto fiber = [&](Elt hx, Elt fx) -> unsigned {
    if (p != 2) {
      const Elt disc = k.add(k.mul(hx, hx), k.mul(four, fx));
      return disc == 0 ? 1 : (table[disc] ? 2 : 0);
    }
    if (hx == 0) return 1;  // y^2 = f(x) has a unique root
    const Elt hinv = k.inv(hx);
    return table[k.mul(fx, k.mul(hinv, hinv))] ? 2 : 0;
  };

  std::atomic<std::uint64_t> affine{0};
  const unsigned workers = opt.threads ? opt.threads : worker_count();
  parallel_chunks(size, workers, [&](std::uint64_t lo, std::uint64_t hi) {
    std::uint64_t local = 0;
    for (std::uint64_t x = lo; x < hi; ++x) {
      const Elt xe = static_cast<Elt>(x);
      local += fiber(eval(k, h, xe), eval(k, f, xe));
    }
    affine += local;
  });

  const int d = std::max(h.empty() ? -1 : 2 * deg(h), deg(f));
  unsigned infinity = 1;
  if (d % 2 == 0) {
    const Elt htop = deg(h) == d / 2 ? h.back() : 0;
    const Elt ftop = deg(f) == d ? f.back() : 0;
    infinity = fiber(htop, ftop);
  }
  return BigInt(std::to_string(affine.load() + infinity));
}

ZetaData zeta_from_counts(const BigInt& q, unsigned g, const std::vector<BigInt>& counts) {
  if (counts.size() < g)
    throw ContractError("zeta_from_counts: need " + std::to_string(g) + " point counts, got " +
                        std::to_string(counts.size()));
  // Power sums of Frobenius eigenvalues, then elementary symmetric functions.
  std::vector<BigInt> s(g + 1), e(g + 1);
  for (unsigned m = 1; m <= g; ++m) s[m] = power(q, m) + 1 - counts[m - 1];
  e[0] = 1;
  for (unsigned kk = 1; kk <= g; ++kk) {
    BigInt acc = 0;
    for (unsigned i = 1; i <= kk; ++i) acc += (i % 2 ? 1 : -1) * e[kk - i] * s[i];
    if (acc % kk != 0)
      throw ValidationError({"point counts do not come from a genus-" + std::to_string(g) +
                             " curve: Newton identity " + std::to_string(kk) + " is not integral"});
    e[kk] = acc / kk;
  }
  std::vector<BigInt> ch(2 * g + 1);
  ch[2 * g] = 1;
  for (unsigned kk = 1; kk <= g; ++kk) ch[2 * g - kk] = (kk % 2 ? -1 : 1) * e[kk];
  for (unsigned m = 0; m < g; ++m) ch[m] = power(q, g - m) * ch[2 * g - m];

  auto v = WeilPolynomial::violations(q, IntPolynomial(ch));
  if (!v.empty()) {
    v.insert(v.begin(), "point counts inconsistent with a genus-" + std::to_string(g) + " curve over F_" +
                            q.get_str() + "; reconstructed " + IntPolynomial(ch).to_string());
    throw ValidationError(std::move(v));
  }
  ZetaData z{q, g, WeilPolynomial::validate(q, IntPolynomial(ch)),
             std::vector<BigInt>(counts.begin(), counts.begin() + g)};
  std::vector<std::string> extra;
  for (std::size_t m = g + 1; m <= counts.size(); ++m)
    if (curve_count(z, m) != counts[m - 1])
      extra.push_back("N_" + std::to_string(m) + " = " + counts[m - 1].get_str() + " but the first " +
                      std::to_string(g) + " counts force " + curve_count(z, m).get_str());
  if (!extra.empty()) throw ValidationError(std::move(extra));
  return z;
}

ZetaData zeta_data(const CurveSpec& c, const EnumerationOptions& opt) {
  field_shape(c.q);
  std::vector<std::string> v;
  std::optional<unsigned> g;
  auto agree = [&](unsigned candidate, const std::string& source) {
    if (!g) g = candidate;
    else if (*g != candidate)
      v.push_back("genus " + std::to_string(candidate) + " from " + source + " disagrees with genus " +
                  std::to_string(*g));
  };

  HyperellipticModel storage;
  const HyperellipticModel* model = nullptr;
  if (c.weierstrass || c.hyperelliptic) model = &model_of(c, storage);

  if (c.genus) agree(*c.genus, "declaration");
  if (model) agree(model_genus(c.q, *model), "model");
  for (const auto* poly : {&c.weil_polynomial, &c.l_polynomial})
    if (*poly) {
      if ((*poly)->degree() < 0 || (*poly)->degree() % 2) v.push_back("polynomial has odd degree");
      else agree(static_cast<unsigned>((*poly)->degree() / 2), "polynomial degree");
    }
  if (!g && !c.point_counts.empty()) g = static_cast<unsigned>(c.point_counts.size());
  if (!v.empty()) throw ValidationError(std::move(v));
  if (!g) throw ContractError("curve spec carries no genus, model, counts or polynomial");

  std::optional<ZetaData> z;
  auto from_weil = [&](const WeilPolynomial& w) {
    ZetaData out{c.q, *g, w, {}};
    for (unsigned m = 1; m <= *g; ++m) out.point_counts.push_back(curve_count(out, m));
    return out;
  };
  if (c.weil_polynomial) z = from_weil(WeilPolynomial::validate(c.q, *c.weil_polynomial));
  if (c.l_polynomial) {
    const ZetaData zl = from_weil(weil_from_l_polynomial(c.q, *c.l_polynomial));
    if (!z) z = zl;
    else if (!(zl.weil == z->weil)) v.push_back("L-polynomial and Weil polynomial disagree");
  }
  if (!c.point_counts.empty()) {
    if (!z) {
      z = zeta_from_counts(c.q, *g, c.point_counts);
    } else {
      for (std::size_t m = 1; m <= c.point_counts.size(); ++m)
        if (curve_count(*z, m) != c.point_counts[m - 1])
          v.push_back("N_" + std::to_string(m) + " = " + c.point_counts[m - 1].get_str() +
                      " disagrees with the polynomial data (" + curve_count(*z, m).get_str() + ")");
    }
  }
  if (!z && *g == 0) z = ZetaData{c.q, 0, WeilPolynomial::validate(c.q, IntPolynomial::constant(1)), {}};
  if (model) {
    std::vector<BigInt> counts;
    for (unsigned m = 1; m <= *g; ++m) {
      if (!z && checked_power(c.q.get_ui(), m, opt.cap) > opt.cap)
        throw ContractError("zeta_data: q^" + std::to_string(m) + " exceeds the enumeration cap; supply counts");
      if (checked_power(c.q.get_ui(), m, opt.cap) > opt.cap) break;
      counts.push_back(brute_force_count(c, m, opt));
    }
    if (!z) {
      z = zeta_from_counts(c.q, *g, counts);
    } else {
      for (std::size_t m = 1; m <= counts.size(); ++m)
        if (curve_count(*z, m) != counts[m - 1])
          v.push_back("model has " + counts[m - 1].get_str() + " points over F_{q^" + std::to_string(m) +
                      "} but the supplied data predict " + curve_count(*z, m).get_str());
    }
  }
  if (!v.empty()) throw ValidationError(std::move(v));
  if (!z) throw ContractError("curve spec carries no data from which to derive the zeta function");
  return *z;
}

BigInt curve_count(const ZetaData& z, std::uint64_t n) {
  if (n < 1) throw ContractError("curve_count: n must be >= 1");
  const BigInt s = z.genus == 0 ? BigInt(0) : root_power_sums(z.weil.ch(), n).back();
  return power(z.q, n) + 1 - s;
}

BigInt jacobian_count(const ZetaData& z, std::uint64_t n) { return point_count(z.weil, n); }

BigInt jacobian_count(const CurveSpec& c, std::uint64_t n, const EnumerationOptions& opt) {
  return jacobian_count(zeta_data(c, opt), n);
}

IntPolynomial l_polynomial(const WeilPolynomial& w) { return w.ch().reversed(); }

WeilPolynomial weil_from_l_polynomial(const BigInt& q, const IntPolynomial& p) {
  if (p.is_zero() || p.coeff(0) != 1) throw ValidationError({"L-polynomial must have constant term 1"});
  return WeilPolynomial::validate(q, p.reversed());
}

}  // namespace weilcensus
