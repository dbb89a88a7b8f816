#include "specfun/continuation.hpp"

#include <cmath>
#include <string>

#include "kernel_terms.hpp"
#include "specfun/elementary.hpp"
#include "specfun/gamma.hpp"
#include "specfun/quadrature.hpp"

namespace specfun {
namespace {

Complex reduced_exponent(Complex m, const char* what) {
  const Complex reduced = reduce_strip(m);
  if (reduced == Complex(0.0, 0.0)) {
    throw Error(ErrorKind::singularity, std::string(what) + ": e^m = 1 is singular");
  }
  return reduced;
}

void require_offset(Complex b, const char* what) {
  if (!(b.real() > 0.0)) {
    throw Error(ErrorKind::domain, std::string(what) + ": requires Re(b) > 0");
  }
}

}  // namespace

EvalResult zeta(Complex k, const QuadratureSpec& spec, PoleTerm pole) {
  if (pole == PoleTerm::include && k == Complex(1.0, 0.0)) {
    throw Error(ErrorKind::pole, "zeta: pole at k = 1");
  }
  EvalResult result;
  result.value = 0.5;
  if (pole == PoleTerm::include) result.value += 1.0 / (k - 1.0);
  if (k != Complex(0.0, 0.0)) {
    accumulate(result, detail::bracket_integral(1.0, -k, 0.0, spec), -0.5 * imag_unit);
  }
  return result;
}

EvalResult zeta_derivative_at_zero(int q, const QuadratureSpec& spec) {
  if (q < 1) {
    throw Error(ErrorKind::domain, "zeta_derivative_at_zero: requires q >= 1");
  }
  // On the real line log(1 - ix) = conj(log(1 + ix)), so the bracket is
  // 2 i Im(log^q(1 + ix)).
  const double at_zero = q == 1 ? -2.0 / pi : 0.0;
  auto h = [=](double x) -> Complex {
    if (x == 0.0) return Complex(0.0, at_zero);
    const Complex l = clog1p(Complex(0.0, x));
    return kernel_value(x) * Complex(0.0, 2.0 * ipow(l, q).imag());
  };
  const EvalResult integral = integrate_exp_kernel(h, spec);
  EvalResult result;
  result.value = -factorial(q);
  const double sign = (q % 2 == 0) ? 1.0 : -1.0;
  accumulate(result, integral, -0.5 * imag_unit * sign);
  return result;
}

EvalResult hurwitz_zeta_neg(Complex k, Complex b, const QuadratureSpec& spec) {
  if (k == Complex(-1.0, 0.0)) {
    throw Error(ErrorKind::pole, "hurwitz_zeta_neg: pole at k = -1");
  }
  require_offset(b, "hurwitz_zeta_neg");
  EvalResult result;
  result.value = -cpow(b, k + 1.0) / (k + 1.0) + 0.5 * cpow(b, k);
  accumulate(result, detail::bracket_integral(b, k, 0.0, spec), -0.5 * imag_unit);
  return result;
}

EvalResult polylog_neg(Complex k, Complex m, const QuadratureSpec& spec) {
  m = reduced_exponent(m, "polylog_neg");
  const Complex em = std::exp(m);
  EvalResult result;
  // (-m)^{-k-1} Gamma(k+1, -m) = e^m * paired term with c = 1
  result.value = 0.5 * em + em * paired_gamma_term(k + 1.0, -m, 1.0);
  accumulate(result, detail::bracket_integral(1.0, k, m, spec), -0.5 * imag_unit * em);
  return result;
}

EvalResult lerch_phi_neg(Complex k, Complex m, Complex b, const QuadratureSpec& spec) {
  m = reduced_exponent(m, "lerch_phi_neg");
  require_offset(b, "lerch_phi_neg");
  EvalResult result;
  result.value = 0.5 * cpow(b, k) + paired_gamma_term(k + 1.0, -m, b);
  accumulate(result, detail::bracket_integral(b, k, m, spec), -0.5 * imag_unit);
  return result;
}

double bernoulli(int j2, const QuadratureSpec& spec) {
  if (j2 < 0 || j2 % 2 != 0) {
    throw Error(ErrorKind::domain, "bernoulli: index must be even and nonnegative");
  }
  if (j2 == 0) return 1.0;
  const int j = j2 / 2;
  const double zeta_2j = zeta(Complex(j2, 0.0), spec).value.real();
  const double sign = (j % 2 == 0) ? 1.0 : -1.0;
  return -2.0 * sign * factorial(j2) * std::pow(two_pi, -j2) * zeta_2j;
}

}  // namespace specfun
