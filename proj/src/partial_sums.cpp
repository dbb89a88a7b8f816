#include "specfun/partial_sums.hpp"

#include <cmath>
#include <string>

#include "kernel_terms.hpp"
#include "specfun/continuation.hpp"
#include "specfun/elementary.hpp"
#include "specfun/gamma.hpp"
#include "specfun/oracles.hpp"

namespace specfun {
namespace {

void require_center(Complex c, const char* what) {
  if (!(c.real() > 0.0)) {
    throw Error(ErrorKind::domain, std::string(what) + ": integral center must have positive real part");
  }
}

void finish(PartialSumResult& r, const EvalResult& transcendent, const EvalResult& integral, Complex integral_factor) {
  r.terms.transcendent = transcendent.value;
  r.terms.integral = integral_factor * integral.value;
  r.value = r.terms.leading + r.terms.transcendent + r.terms.gamma + r.terms.integral;
  r.err_est = transcendent.err_est + std::abs(integral_factor) * integral.err_est;
  r.converged = transcendent.converged && integral.converged;
}

// Exponent used inside the oscillatory partial sums (see header).
Complex partial_sum_exponent(Complex m, Complex n, const char* what) {
  if (is_integer(n)) {
    const Complex reduced = reduce_strip(m);
    if (reduced == Complex(0.0, 0.0)) {
      throw Error(ErrorKind::singularity, std::string(what) + ": e^m = 1 is singular");
    }
    return reduced;
  }
  if (m == Complex(0.0, 0.0)) {
    throw Error(ErrorKind::singularity, std::string(what) + ": e^m = 1 is singular");
  }
  if (!(std::abs(m.imag()) < two_pi)) {
    throw Error(ErrorKind::domain, std::string(what) + ": requires |Im(m)| < 2 pi for non-integer n");
  }
  return m;
}

// Shared tail of the polylog and Lerch relations at center c:
//   e^{m(n+1)} [ -c^k/2 - paired(k+1, -m, c) + (i/2) Int ... ].
void oscillatory_tail(PartialSumResult& r, Complex k, Complex m, Complex n, Complex c, const EvalResult& transcendent,
                      const QuadratureSpec& spec) {
  const Complex scale = std::exp(m * (n + 1.0));
  r.terms.leading = -0.5 * cpow(c, k) * scale;
  r.terms.gamma = -paired_gamma_term(k + 1.0, -m, c) * scale;
  finish(r, transcendent, detail::bracket_integral(c, k, m, spec), 0.5 * imag_unit * scale);
}

}  // namespace

PartialSumResult harmonic_sum(Complex k, Complex n, const QuadratureSpec& spec) {
  if (k == Complex(-1.0, 0.0)) {
    throw Error(ErrorKind::pole, "harmonic_sum: pole at k = -1");
  }
  const Complex c = n + 1.0;
  require_center(c, "harmonic_sum");
  PartialSumResult r;
  r.terms.leading = cpow(c, k + 1.0) / (k + 1.0) - 0.5 * cpow(c, k);
  finish(r, zeta(-k, spec), detail::bracket_integral(c, k, 0.0, spec), 0.5 * imag_unit);
  return r;
}

Complex faulhaber_odd(int k, Complex n) {
  if (k < 1) {
    throw Error(ErrorKind::domain, "faulhaber_odd: requires k >= 1");
  }
  using boost::multiprecision::cpp_int;
  Complex value = 0.5 * ipow(n, 2 * k - 1);
  for (int j = 0; j < k; ++j) {
    // (2k-1)! B_{2j} / ((2j)! (2k-2j)!) = B_{2j} C(2k, 2j) / (2k)
    cpp_int choose = 1;
    for (int i = 1; i <= 2 * j; ++i) choose = choose * (2 * k - 2 * j + i) / i;
    RationalValue coeff = bernoulli_exact(2 * j) * RationalValue(choose, cpp_int(2 * k));
    value += static_cast<double>(coeff) * ipow(n, 2 * k - 2 * j);
  }
  return value;
}

PartialSumResult hurwitz_partial(Complex k, Complex b, Complex n, const QuadratureSpec& spec) {
  if (k == Complex(-1.0, 0.0)) {
    throw Error(ErrorKind::pole, "hurwitz_partial: pole at k = -1");
  }
  const Complex c = n + 1.0 + b;
  require_center(c, "hurwitz_partial");
  PartialSumResult r;
  r.terms.leading = cpow(c, k + 1.0) / (k + 1.0) - 0.5 * cpow(c, k);
  finish(r, hurwitz_zeta_neg(k, b, spec), detail::bracket_integral(c, k, 0.0, spec), 0.5 * imag_unit);
  return r;
}

PartialSumResult polylog_partial(Complex k, Complex m, Complex n, const QuadratureSpec& spec) {
  m = partial_sum_exponent(m, n, "polylog_partial");
  const Complex c = n + 1.0;
  require_center(c, "polylog_partial");
  PartialSumResult r;
  oscillatory_tail(r, k, m, n, c, polylog_neg(k, m, spec), spec);
  return r;
}

PartialSumResult lerch_partial(Complex k, Complex m, Complex b, Complex n, const QuadratureSpec& spec) {
  m = partial_sum_exponent(m, n, "lerch_partial");
  const Complex c = n + 1.0 + b;
  require_center(c, "lerch_partial");
  PartialSumResult r;
  oscillatory_tail(r, k, m, n, c, lerch_phi_neg(k, m, b, spec), spec);
  return r;
}

EvalResult key_sum(int k, Complex n, const QuadratureSpec& spec) {
  if (k < 1) {
    throw Error(ErrorKind::domain, "key_sum: requires k >= 1");
  }
  if (n == Complex(0.0, 0.0) || !(n.real() > 0.0)) {
    throw Error(ErrorKind::domain, "key_sum: requires Re(n) > 0");
  }
  const double f = factorial(2 * k - 1);
  EvalResult result;
  result.value = 1.0 / (4.0 * n * f) +
                 (1.0 / (n + 1.0) - 1.0 / static_cast<double>(k)) * ipow(1.0 + 1.0 / n, 2 * k) / (4.0 * f);
  const Complex factor = -imag_unit * ipow(n, -2 * k) / (4.0 * f);
  accumulate(result, detail::bracket_integral(n + 1.0, 2.0 * k - 1.0, 0.0, spec), factor);
  return result;
}

EvalResult lerch_limit(int k, Complex n, const QuadratureSpec& spec) {
  if (k < 1) {
    throw Error(ErrorKind::domain, "lerch_limit: requires k >= 1");
  }
  const Complex c = n + 1.0;
  require_center(c, "lerch_limit");
  EvalResult result;
  result.value = 0.5 * ipow(c, 2 * k - 1) - ipow(c, 2 * k) / (2.0 * k);
  accumulate(result, detail::bracket_integral(c, 2.0 * k - 1.0, 0.0, spec), -0.5 * imag_unit);
  return result;
}

}  // namespace specfun
