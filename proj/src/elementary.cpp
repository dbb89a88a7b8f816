#include "specfun/elementary.hpp"

#include <cmath>

namespace specfun {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::domain: return "domain";
    case ErrorKind::pole: return "pole";
    case ErrorKind::singularity: return "singularity";
    case ErrorKind::range: return "range";
    case ErrorKind::nonconvergence: return "nonconvergence";
    case ErrorKind::evaluation: return "evaluation";
  }
  return "unknown";
}

QuadratureSpec QuadratureSpec::with_tolerance(double rel_tol, double abs_tol) {
  QuadratureSpec spec;
  spec.rel_tol = rel_tol;
  spec.abs_tol = abs_tol;
  // |1 - coth(pi x)| ~ 2 exp(-2 pi x)
  const double threshold = abs_tol > 0.0 ? std::log(2.0 / abs_tol) / two_pi : 0.0;
  spec.x_max = std::max(30.0, threshold);
  spec.validate();
  return spec;
}

void QuadratureSpec::validate() const {
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0) || max_depth < 1 || !(x_max > 0.0)) {
    throw Error(ErrorKind::domain, "QuadratureSpec: tolerances and x_max must be positive, max_depth >= 1");
  }
}

Complex clog(Complex z) {
  if (z.imag() == 0.0 && z.real() < 0.0) {
    return {std::log(-z.real()), pi};
  }
  return std::log(z);
}

Complex clog1p(Complex w) {
  const double a = w.real();
  const double b = w.imag();
  if (std::abs(w) > 0.5) {
    return clog(Complex(1.0 + a, b));
  }
  // |1+w|^2 - 1 = 2a + a^2 + b^2
  const double re = 0.5 * std::log1p(a * (2.0 + a) + b * b);
  const double im = std::atan2(b, 1.0 + a);
  return {re, im};
}

Complex cexpm1(Complex w) {
  const double a = w.real();
  const double b = w.imag();
  const double em1 = std::expm1(a);
  const double half_sin = std::sin(0.5 * b);
  // exp(a) cos(b) - 1 = expm1(a) cos(b) - 2 sin^2(b/2)
  const double re = em1 * std::cos(b) - 2.0 * half_sin * half_sin;
  const double im = std::exp(a) * std::sin(b);
  return {re, im};
}

Complex ipow(Complex z, int n) {
  if (n < 0) {
    return 1.0 / ipow(z, -n);
  }
  Complex result = 1.0;
  Complex base = z;
  while (n > 0) {
    if (n & 1) result *= base;
    base *= base;
    n >>= 1;
  }
  return result;
}

Complex cpow(Complex base, Complex exponent) {
  if (base == Complex(0.0, 0.0)) {
    if (exponent.real() > 0.0) {
      return 0.0;
    }
    throw Error(ErrorKind::singularity, "cpow: zero base requires Re(exponent) > 0");
  }
  if (exponent.imag() == 0.0) {
    const double e = exponent.real();
    if (e == std::nearbyint(e) && std::abs(e) <= 64.0) {
      return ipow(base, static_cast<int>(e));
    }
  }
  return std::exp(exponent * clog(base));
}

Complex reduce_strip(Complex m) {
  double im = std::remainder(m.imag(), two_pi);
  if (im <= -pi) im += two_pi;
  if (im > pi) im -= two_pi;
  return {m.real(), im};
}

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double c = 1.0;
  for (int i = 1; i <= k; ++i) {
    c = c * (n - k + i) / i;
  }
  return std::nearbyint(c);
}

}  // namespace specfun
