#include "weilcensus/complex_roots.hpp"

#include <algorithm>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include "weilcensus/errors.hpp"

namespace weilcensus {
namespace {

using Real = boost::multiprecision::cpp_bin_float_50;
using Complex = boost::multiprecision::cpp_complex_50;

Real to_real(const BigInt& x) { return Real(x.get_str()); }

struct Evaluation {
  Complex value;
  Complex derivative;
  Real magnitude_sum;  // sum |c_i| |z|^i, for the rounding-error floor
};

Evaluation horner(const std::vector<Real>& c, const Complex& z) {
  Complex v = 0, d = 0;
  Real mag = 0;
  const Real az = abs(z);
  for (std::size_t i = c.size(); i-- > 0;) {
    d = d * z + v;
    v = v * z + Complex(c[i]);
    mag = mag * az + abs(c[i]);
  }
  return {v, d, mag};
}

}  // namespace

std::vector<ComplexRootApprox> complex_roots(const IntPolynomial& f) {
  if (f.degree() < 1) return {};
  if (!is_squarefree(f)) throw ContractError("complex_roots: polynomial must be squarefree");
  const auto n = static_cast<std::size_t>(f.degree());
  std::vector<Real> c;
  for (const auto& x : f.coeffs()) c.push_back(to_real(x));

  // Cauchy bound for the initial circle.
  Real bound = 0;
  for (std::size_t i = 0; i < n; ++i) bound = std::max(bound, Real(abs(c[i] / c[n])));
  bound += 1;

  std::vector<Complex> z(n);
  const Real pi = boost::math::constants::pi<Real>();
  for (std::size_t k = 0; k < n; ++k) {
    const Real angle = 2 * pi * (Real(k) + Real("0.25")) / Real(n) + Real("0.4");
    z[k] = Complex(bound * Real("0.5") * cos(angle), bound * Real("0.5") * sin(angle));
  }

  const Real tol("1e-45");
  for (int iter = 0; iter < 2000; ++iter) {
    Real max_step = 0;
    for (std::size_t k = 0; k < n; ++k) {
      const Evaluation e = horner(c, z[k]);
      if (e.value == Complex(0)) continue;
      const Complex w = e.value / e.derivative;
      Complex sum = 0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != k) sum += Complex(1) / (z[k] - z[j]);
      const Complex step = w / (Complex(1) - w * sum);
      z[k] -= step;
      max_step = std::max(max_step, Real(abs(step) / (1 + abs(z[k]))));
    }
    if (max_step < tol) break;
  }

  std::vector<ComplexRootApprox> out;
  out.reserve(n);
  const Real eps("1e-48");
  for (auto& root : z) {
    // Newton polish.
    for (int i = 0; i < 3; ++i) {
      const Evaluation e = horner(c, root);
      if (e.derivative != Complex(0)) root -= e.value / e.derivative;
    }
    const Evaluation e = horner(c, root);
    const Real residual = abs(e.value) + eps * e.magnitude_sum;
    const Real radius = Real(n) * residual / abs(e.derivative);
    if (abs(root.imag()) <= radius) root = Complex(root.real(), Real(0));
    ComplexRootApprox r;
    r.re = static_cast<long double>(root.real());
    r.im = static_cast<long double>(root.imag());
    const Real mod2 = root.real() * root.real() + root.imag() * root.imag();
    r.modulus_squared = static_cast<long double>(mod2);
    r.modulus = static_cast<long double>(sqrt(mod2));
    r.error_bound = static_cast<double>(radius);
    r.re_text = root.real().str(25);
    r.im_text = root.imag().str(25);
    out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end(), [](const ComplexRootApprox& a, const ComplexRootApprox& b) {
    const long double aa = std::atan2(a.im, a.re), ab = std::atan2(b.im, b.re);
    if (aa != ab) return aa < ab;
    return a.modulus < b.modulus;
  });
  return out;
}

}  // namespace weilcensus
