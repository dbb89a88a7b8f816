#pragma once

// Integrands shared by the evaluators built on the (1 - coth(pi x)) kernel.

#include <cmath>

#include "specfun/elementary.hpp"
#include "specfun/quadrature.hpp"

namespace specfun::detail {

/// exp(i m x) (c + i x)^k - exp(-i m x) (c - i x)^k for real x and Re(c) > 0,
/// written as 2 c^k exp(k (L+ + L-)/2) sinh(k (L+ - L-)/2 + i m x) with
/// L+- = log(1 +- i x / c). The sinh form keeps full relative accuracy as
/// x -> 0, where the two powers nearly cancel. `c_pow_k` is c^k.
inline Complex power_bracket(Complex c, Complex c_pow_k, Complex k, Complex m, double x) {
  const Complex y = Complex(0.0, x) / c;
  const Complex lp = clog1p(y);
  const Complex lm = clog1p(-y);
  return 2.0 * c_pow_k * std::exp(0.5 * k * (lp + lm)) * std::sinh(0.5 * k * (lp - lm) + imag_unit * m * x);
}

/// Integral over [0, infinity) of (1 - coth(pi x)) times power_bracket.
inline EvalResult bracket_integral(Complex c, Complex k, Complex m, const QuadratureSpec& spec) {
  if (!(c.real() > 0.0)) {
    throw Error(ErrorKind::domain, "kernel integral: center must have positive real part");
  }
  const Complex c_pow_k = cpow(c, k);
  // bracket ~ 2 i c^k (k/c + m) x near the origin; kernel ~ -1/(pi x)
  const Complex at_zero = -2.0 * imag_unit * c_pow_k * (k / c + m) / pi;
  auto h = [=](double x) -> Complex {
    if (x == 0.0) return at_zero;
    return kernel_value(x) * power_bracket(c, c_pow_k, k, m, x);
  };
  QuadratureSpec local = spec;
  if (std::abs(m.real()) > pi) local.max_depth *= 2;
  return integrate_exp_kernel(h, local);
}

}  // namespace specfun::detail
