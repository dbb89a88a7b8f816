#include "specfun/alt_forms.hpp"

#include <cmath>
#include <string>

#include "specfun/continuation.hpp"
#include "specfun/elementary.hpp"
#include "specfun/gamma.hpp"
#include "specfun/quadrature.hpp"

namespace specfun {
namespace {

void require_alt_domain(Complex k, Complex n, const char* what) {
  if (!(n.real() > 0.0)) {
    throw Error(ErrorKind::domain, std::string(what) + ": requires Re(n) > 0");
  }
  if (k == Complex(-1.0, 0.0)) {
    throw Error(ErrorKind::pole, std::string(what) + ": pole at k = -1");
  }
}

void require_center(Complex c, const char* what) {
  if (!(c.real() > 0.0)) {
    throw Error(ErrorKind::domain, std::string(what) + ": requires Re(n+b) > 0");
  }
}

// Same rule as the partial sums: reduce m only when the sum is over an
// integer range.
Complex alt_exponent(Complex m, Complex n, const char* what) {
  const Complex used = is_integer(n) ? reduce_strip(m) : m;
  if (used == Complex(0.0, 0.0)) {
    throw Error(ErrorKind::singularity, std::string(what) + ": e^m = 1 is singular");
  }
  if (!(std::abs(used.imag()) < two_pi)) {
    throw Error(ErrorKind::domain, std::string(what) + ": requires |Im(m)| < 2 pi");
  }
  return used;
}

// (c^2 + s^2)^{k/2} sin(k atan(s/c) + phase), the printed radicand form.
Complex radicand_term(Complex c, Complex s, Complex k, Complex phase) {
  return cpow(c * c + s * s, 0.5 * k) * std::sin(k * std::atan(s / c) + phase);
}

// Integral over t >= 0 of (1 - coth(pi t)) g(t), used by the unit-circle forms.
EvalResult unit_kernel_integral(Complex b, int k, Complex m, const QuadratureSpec& spec) {
  return integrate_tan_kernel([=](double t) { return radicand_term(b, t, static_cast<double>(k), m * t); }, 1.0,
                              spec);
}

}  // namespace

EvalResult harmonic_sum_v2(Complex k, Complex n, const QuadratureSpec& spec) {
  require_alt_domain(k, n, "harmonic_sum_v2");
  EvalResult result;
  result.value = cpow(n, k + 1.0) / (k + 1.0) + 0.5 * cpow(n, k);
  accumulate(result, zeta(-k, spec));
  if (k == Complex(0.0, 0.0)) return result;
  auto g = [=](double t) { return std::sin(k * std::atan(t)) * std::exp(0.5 * k * std::log1p(t * t)); };
  accumulate(result, integrate_tan_kernel(g, n, spec), -cpow(n, k + 1.0));
  return result;
}

EvalResult harmonic_sum_v1(Complex k, Complex n, const QuadratureSpec& spec) {
  require_alt_domain(k, n, "harmonic_sum_v1");
  EvalResult result;
  result.value = cpow(n, k + 1.0) / (k + 1.0) + 0.5 * cpow(n, k);
  accumulate(result, zeta(-k, spec));
  const Complex kp1 = k + 1.0;
  // 1 - e^S cos(theta) = -expm1(S) + 2 e^S sin^2(theta/2), both pieces O(t^2).
  auto g = [=](double t) {
    const Complex s = 0.5 * kp1 * std::log1p(t * t);
    const Complex half = std::sin(0.5 * kp1 * std::atan(t));
    return -cexpm1(s) + 2.0 * std::exp(s) * half * half;
  };
  accumulate(result, integrate_csch2_kernel(g, n, spec), pi * cpow(n, k + 2.0) / kp1);
  return result;
}

EvalResult hurwitz_partial_alt(Complex k, Complex b, Complex n, const QuadratureSpec& spec) {
  require_alt_domain(k, n, "hurwitz_partial_alt");
  const Complex c = n + b;
  require_center(c, "hurwitz_partial_alt");
  EvalResult result;
  result.value = cpow(c, k + 1.0) / (k + 1.0) + 0.5 * cpow(c, k);
  accumulate(result, hurwitz_zeta_neg(k, b, spec));
  if (k == Complex(0.0, 0.0)) return result;
  auto g = [=](double t) { return radicand_term(c, n * t, k, 0.0); };
  accumulate(result, integrate_tan_kernel(g, n, spec), -n);
  return result;
}

EvalResult polylog_partial_alt(Complex k, Complex m, Complex n, const QuadratureSpec& spec) {
  m = alt_exponent(m, n, "polylog_partial_alt");
  require_alt_domain(k, n, "polylog_partial_alt");
  const Complex scale = std::exp(m * n);
  EvalResult result;
  result.value = 0.5 * cpow(n, k) * scale - scale * paired_gamma_term(k + 1.0, -m, n);
  accumulate(result, polylog_neg(k, m, spec));
  const Complex mn = m * n;
  auto g = [=](double t) { return std::sin(k * std::atan(t) + mn * t) * std::exp(0.5 * k * std::log1p(t * t)); };
  accumulate(result, integrate_tan_kernel(g, n, spec), -cpow(n, k + 1.0) * scale);
  return result;
}

EvalResult lerch_partial_alt(Complex k, Complex m, Complex b, Complex n, const QuadratureSpec& spec) {
  m = alt_exponent(m, n, "lerch_partial_alt");
  require_alt_domain(k, n, "lerch_partial_alt");
  const Complex c = n + b;
  require_center(c, "lerch_partial_alt");
  const Complex scale = std::exp(m * n);
  EvalResult result;
  result.value = 0.5 * cpow(c, k) * scale - scale * paired_gamma_term(k + 1.0, -m, c);
  accumulate(result, lerch_phi_neg(k, m, b, spec));
  const Complex mn = m * n;
  auto g = [=](double t) { return radicand_term(c, n * t, k, mn * t); };
  accumulate(result, integrate_tan_kernel(g, n, spec), -n * scale);
  return result;
}

EvalResult lerch_unit_circle(double x, int k, Complex n, const QuadratureSpec& spec) {
  if (!std::isfinite(x)) {
    throw Error(ErrorKind::domain, "lerch_unit_circle: x must be finite");
  }
  const double reduced = x - std::ceil(x - 0.5);
  if (reduced == 0.0) {
    throw Error(ErrorKind::singularity, "lerch_unit_circle: e^{2 pi i x} = 1 is singular");
  }
  if (k < 0) {
    throw Error(ErrorKind::domain, "lerch_unit_circle: requires k >= 0");
  }
  const Complex b = n + 1.0;
  if (!(b.real() > 0.0)) {
    throw Error(ErrorKind::domain, "lerch_unit_circle: requires Re(n+1) > 0");
  }
  const Complex m(0.0, two_pi * reduced);
  EvalResult result;
  result.value = 0.5 * ipow(b, k) + paired_gamma_term(k + 1.0, -m, b);
  accumulate(result, unit_kernel_integral(b, k, m, spec));
  return result;
}

EvalResult lerch_limit_combination(int k, Complex n, double x, const QuadratureSpec& spec) {
  if (k < 1) {
    throw Error(ErrorKind::domain, "lerch_limit_combination: requires k >= 1");
  }
  if (!(std::abs(x) > 0.0 && std::abs(x) < 1.0)) {
    throw Error(ErrorKind::domain, "lerch_limit_combination: requires 0 < |x| < 1");
  }
  const Complex b = n + 1.0;
  if (!(b.real() > 0.0)) {
    throw Error(ErrorKind::domain, "lerch_limit_combination: requires Re(n+1) > 0");
  }
  const Complex m(0.0, two_pi * x);
  const Complex weight = m / (2.0 * k);
  const Complex b_even = ipow(b, 2 * k);
  EvalResult result;
  // The two incomplete-gamma terms sum to -b^{2k}/(2k) exactly.
  result.value = 0.5 * ipow(b, 2 * k - 1) + 0.5 * weight * b_even - b_even / (2.0 * k);
  accumulate(result, unit_kernel_integral(b, 2 * k - 1, m, spec));
  accumulate(result, unit_kernel_integral(b, 2 * k, m, spec), weight);
  return result;
}

}  // namespace specfun
