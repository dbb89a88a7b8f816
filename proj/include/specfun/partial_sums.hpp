#pragma once

#include "specfun/types.hpp"

namespace specfun {

/// A partial sum split into the closed-form pieces it was assembled from.
/// `value` is always leading + transcendent + gamma + integral.
struct PartialSumResult {
  struct Terms {
    Complex leading{0.0, 0.0};      // powers of the center (n+1, n+1+b, ...)
    Complex transcendent{0.0, 0.0}; // zeta(-k), zeta(-k,b), Li or Phi
    Complex gamma{0.0, 0.0};        // incomplete-gamma piece (polylog/Lerch)
    Complex integral{0.0, 0.0};     // kernel integral with its prefactor
  };

  Complex value{0.0, 0.0};
  double err_est = 0.0;
  bool converged = true;
  Terms terms;
};

/// H_{-k}(n) = sum_{j=1..n} j^k, continued in k and n (Re(n+1) > 0, k != -1).
PartialSumResult harmonic_sum(Complex k, Complex n, const QuadratureSpec& spec = {});

/// Faulhaber polynomial for sum_{j=1..n} j^(2k-1) with exact Bernoulli
/// coefficients; k >= 1.
Complex faulhaber_odd(int k, Complex n);

/// sum_{q=0..n} (q+b)^k; requires Re(b) > 0 and Re(n+1+b) > 0.
PartialSumResult hurwitz_partial(Complex k, Complex b, Complex n, const QuadratureSpec& spec = {});

/// sum_{q=1..n} q^k e^(m q); requires Re(n+1) > 0.
///
/// For integer n the sum depends on e^m only and m is strip-reduced. For
/// non-integer n the continuation depends on m itself, so m is used as given
/// and must satisfy |Im(m)| < 2 pi.
PartialSumResult polylog_partial(Complex k, Complex m, Complex n, const QuadratureSpec& spec = {});

/// sum_{q=0..n} (q+b)^k e^(m q); requires Re(b) > 0 and Re(n+1+b) > 0.
/// Strip handling as for polylog_partial.
PartialSumResult lerch_partial(Complex k, Complex m, Complex b, Complex n, const QuadratureSpec& spec = {});

/// sum_{j=0..k} (2 pi i n)^(-2j) zeta(2j) / (2k-2j)! in closed form; k >= 1,
/// Re(n) > 0.
EvalResult key_sum(int k, Complex n, const QuadratureSpec& spec = {});

/// Limit as x -> 0 of Phi(e^{2 pi i x}, -2k+1, n+1) + (pi i x / k) Phi(e^{2 pi i x}, -2k, n+1);
/// k >= 1, Re(n+1) > 0.
EvalResult lerch_limit(int k, Complex n, const QuadratureSpec& spec = {});

}  // namespace specfun
