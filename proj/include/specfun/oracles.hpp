#pragma once

// Ground-truth implementations used to check the integral formulas. None of
// these route through the kernel-integral evaluators except
// binomial_recombination, whose point is to compare two evaluator
// combinations against each other.

#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "specfun/trig_derivs.hpp"
#include "specfun/types.hpp"

namespace specfun {

using RationalValue = boost::multiprecision::cpp_rational;

/// Exact B_j for even 0 <= j <= 60 via sum_{i=0..p} C(p+1, i) B_i = 0.
RationalValue bernoulli_exact(int j);

/// sum_{q=start..n} (q+b)^k e^(m q) with compensated accumulation.
Complex brute_partial_sum(Complex k, Complex m, Complex b, int n, int start);

/// sum_{j=1..N} j^-k + N^(1-k)/(k-1) - N^-k / 2; error O(N^(-Re k - 1)).
/// Requires Re(k) > 1.1 and N >= 10.
Complex dirichlet_series_zeta(Complex k, int n_terms);

/// (1/Gamma(k)) Int_0^inf x^(k-1) / (e^x - 1) dx for Re(k) > 1.
EvalResult literature_integral_zeta(Complex k, const QuadratureSpec& spec = {});

/// Phi(e^{2 pi i x}, -k, n+1) from the finite double sum
///   -1/(z-1) sum_{q=0..k} q! (z/(z-1))^q sum_{j=0..q} (-1)^j (j+n+1)^k / (j! (q-j)!).
Complex lerch_closed_form_neg_int(double x, int k, int n);

enum class Recombination { lerch, polylog, hurwitz };

/// (left, right) sides of the binomial recombination identities, each side
/// computed from the continuation evaluators:
///   lerch:   Phi(e^m,-k,u+v)     = sum_j C(k,j) Phi(e^m,-j,v) u^(k-j)
///   polylog: e^m Phi(e^m,-k,u+1) = sum_j C(k,j) Li_{-j}(e^m) u^(k-j)
///   hurwitz: zeta(-k,u+v)        = -u^(k+1)/(k+1) + sum_j C(k,j) zeta(-j,v) u^(k-j)
std::pair<Complex, Complex> binomial_recombination(Recombination kind, int k, Complex u, Complex v, Complex m,
                                                   const QuadratureSpec& spec = {});

/// k-th derivative of the trigonometric function by symbolic differentiation
/// over the closed rings {cot, csc} and {tan, sec}, then direct evaluation.
Complex symbolic_trig_derivative(const TrigKind& t, int k, Complex x);

}  // namespace specfun
