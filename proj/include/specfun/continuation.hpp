#pragma once

#include "specfun/types.hpp"

namespace specfun {

/// Parameters naming a transcendent and its evaluation point: order k,
/// exponent m (argument e^m), offset b and upper summation limit n.
struct FunctionParams {
  Complex k{0.0, 0.0};
  Complex m{0.0, 0.0};
  Complex b{1.0, 0.0};
  Complex n{0.0, 0.0};
};

enum class PoleTerm { include, exclude };

/// Riemann zeta on C \ {1}:
///   zeta(k) = 1/(k-1) + 1/2 - (i/2) Int (1 - coth pi x)((1+ix)^-k - (1-ix)^-k) dx.
/// With PoleTerm::exclude the 1/(k-1) term is dropped, which leaves an
/// entire function (k = 1 then gives Euler's constant).
EvalResult zeta(Complex k, const QuadratureSpec& spec = {}, PoleTerm pole = PoleTerm::include);

/// q-th derivative of zeta at 0 for q >= 1.
EvalResult zeta_derivative_at_zero(int q, const QuadratureSpec& spec = {});

/// Hurwitz zeta zeta(-k, b) for Re(b) > 0, k != -1.
EvalResult hurwitz_zeta_neg(Complex k, Complex b, const QuadratureSpec& spec = {});

/// Polylogarithm Li_{-k}(e^m). m is reduced into Im(m) in (-pi, pi] first;
/// e^m = 1 raises ErrorKind::singularity.
EvalResult polylog_neg(Complex k, Complex m, const QuadratureSpec& spec = {});

/// Lerch transcendent Phi(e^m, -k, b) for Re(b) > 0, e^m != 1.
EvalResult lerch_phi_neg(Complex k, Complex m, Complex b, const QuadratureSpec& spec = {});

/// Even-index Bernoulli number B_{j2} through B_{2j}/(2j)! = -2 (-1)^j (2 pi)^{-2j} zeta(2j).
double bernoulli(int j2, const QuadratureSpec& spec = {});

}  // namespace specfun
