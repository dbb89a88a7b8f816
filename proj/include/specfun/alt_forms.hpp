#pragma once

// Second family of integral formulas for the same partial sums, written with
// the (1 - coth(pi n tan v)) kernel on [0, pi/2). They agree in value with the
// partial_sums evaluators but are valid only for Re(n) > 0.

#include "specfun/types.hpp"

namespace specfun {

/// sum_{j=1..n} j^k as n^{k+1}/(k+1) + n^k/2 + zeta(-k)
///   - n^{k+1} Int_0^{pi/2} (1 - coth(pi n tan v)) sin(k v) / cos^{k+2}(v) dv.
/// Re(n) > 0, k != -1.
EvalResult harmonic_sum_v2(Complex k, Complex n, const QuadratureSpec& spec = {});

/// Same sum with the csch^2 kernel:
///   ... + pi n^{k+2}/(k+1) Int (sec v csch(pi n tan v))^2 (1 - cos((k+1) v) / cos^{k+1}(v)) dv.
EvalResult harmonic_sum_v1(Complex k, Complex n, const QuadratureSpec& spec = {});

/// sum_{q=0..n} (q+b)^k centered at c = n+b. Re(n) > 0, Re(n+b) > 0.
/// The radicand c^2 + (n tan v)^2 is raised with the principal branch.
EvalResult hurwitz_partial_alt(Complex k, Complex b, Complex n, const QuadratureSpec& spec = {});

/// sum_{q=1..n} q^k e^{m q}. Re(n) > 0; strip handling as polylog_partial.
EvalResult polylog_partial_alt(Complex k, Complex m, Complex n, const QuadratureSpec& spec = {});

/// sum_{q=0..n} (q+b)^k e^{m q}. Re(n) > 0, Re(n+b) > 0.
EvalResult lerch_partial_alt(Complex k, Complex m, Complex b, Complex n, const QuadratureSpec& spec = {});

/// Phi(e^{2 pi i x}, -k, n+1) on the unit circle. x is reduced into
/// (-1/2, 1/2]; integer x raises ErrorKind::singularity. Re(n+1) > 0.
EvalResult lerch_unit_circle(double x, int k, Complex n, const QuadratureSpec& spec = {});

/// Phi(z, -2k+1, n+1) + (pi i x / k) Phi(z, -2k, n+1) with z = e^{2 pi i x},
/// the incomplete-gamma parts of both terms folded together by the
/// recurrence Gamma(a+1, z) = a Gamma(a, z) + z^a e^{-z}. Requires
/// 0 < |x| < 1 and k >= 1; as x -> 0 it tends to lerch_limit(k, n).
EvalResult lerch_limit_combination(int k, Complex n, double x, const QuadratureSpec& spec = {});

}  // namespace specfun
