#include "specfun/oracles.hpp"

#include <cmath>
#include <map>
#include <vector>

#include "specfun/continuation.hpp"
#include "specfun/elementary.hpp"
#include "specfun/gamma.hpp"
#include "specfun/quadrature.hpp"

namespace specfun {
namespace {

using boost::multiprecision::cpp_int;

constexpr int max_bernoulli_index = 60;

// Neumaier summation, applied to real and imaginary parts separately.
class CompensatedSum {
 public:
  void add(Complex v) {
    add_part(re_, re_c_, v.real());
    add_part(im_, im_c_, v.imag());
  }
  Complex value() const { return {re_ + re_c_, im_ + im_c_}; }

 private:
  static void add_part(double& sum, double& comp, double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      comp += (sum - t) + x;
    } else {
      comp += (x - t) + sum;
    }
    sum = t;
  }
  double re_ = 0.0, re_c_ = 0.0, im_ = 0.0, im_c_ = 0.0;
};

cpp_int exact_binomial(int n, int k) {
  cpp_int c = 1;
  for (int i = 1; i <= k; ++i) {
    c = c * (n - k + i) / i;
  }
  return c;
}

const std::vector<RationalValue>& bernoulli_table() {
  static const std::vector<RationalValue> table = [] {
    std::vector<RationalValue> b(max_bernoulli_index + 1);
    b[0] = 1;
    for (int p = 1; p <= max_bernoulli_index; ++p) {
      RationalValue acc = 0;
      for (int i = 0; i < p; ++i) {
        acc += RationalValue(exact_binomial(p + 1, i)) * b[i];
      }
      b[p] = -acc / (p + 1);
    }
    return b;
  }();
  return table;
}

// Polynomial in the two generators of a closed trig ring.
using TrigPolynomial = std::map<std::pair<int, int>, Complex>;

}  // namespace

RationalValue bernoulli_exact(int j) {
  if (j < 0 || j % 2 != 0 || j > max_bernoulli_index) {
    throw Error(ErrorKind::domain, "bernoulli_exact: index must be even with 0 <= j <= 60");
  }
  return bernoulli_table()[j];
}

Complex brute_partial_sum(Complex k, Complex m, Complex b, int n, int start) {
  if (n < start) {
    throw Error(ErrorKind::domain, "brute_partial_sum: requires n >= start");
  }
  CompensatedSum sum;
  for (int q = start; q <= n; ++q) {
    const Complex base = static_cast<double>(q) + b;
    if (base == Complex(0.0, 0.0) && !(k.real() > 0.0)) {
      throw Error(ErrorKind::singularity, "brute_partial_sum: (q+b)^k singular at q+b = 0");
    }
    sum.add(cpow(base, k) * std::exp(m * static_cast<double>(q)));
  }
  return sum.value();
}

Complex dirichlet_series_zeta(Complex k, int n_terms) {
  if (!(k.real() > 1.1)) {
    throw Error(ErrorKind::domain, "dirichlet_series_zeta: requires Re(k) > 1.1");
  }
  if (n_terms < 10) {
    throw Error(ErrorKind::domain, "dirichlet_series_zeta: requires n_terms >= 10");
  }
  CompensatedSum sum;
  for (int j = 1; j <= n_terms; ++j) {
    sum.add(std::exp(-k * std::log(static_cast<double>(j))));
  }
  const double big_n = n_terms;
  const Complex log_n = std::log(big_n);
  // Euler-Maclaurin tail: N^(1-k)/(k-1) - N^(-k)/2
  sum.add(std::exp((1.0 - k) * log_n) / (k - 1.0));
  sum.add(-0.5 * std::exp(-k * log_n));
  return sum.value();
}

EvalResult literature_integral_zeta(Complex k, const QuadratureSpec& spec) {
  if (!(k.real() > 1.0)) {
    throw Error(ErrorKind::domain, "literature_integral_zeta: requires Re(k) > 1");
  }
  // x = u^p makes the integrand vanish at u = 0 at least linearly.
  const double p = std::max(4.0, std::ceil(2.0 / (k.real() - 1.0)));
  const double x_end = 60.0 + 4.0 * k.real();
  const double u_end = std::pow(x_end, 1.0 / p);
  auto f = [=](double u) -> Complex {
    if (u == 0.0) return 0.0;
    const double x = std::pow(u, p);
    return p * std::exp((p * k - 1.0) * std::log(u)) / std::expm1(x);
  };
  EvalResult r = integrate_interval(f, 0.0, u_end, spec);
  const Complex inv_gamma = 1.0 / gamma_complete(k);
  r.value *= inv_gamma;
  r.err_est *= std::abs(inv_gamma);
  return r;
}

Complex lerch_closed_form_neg_int(double x, int k, int n) {
  if (x == std::nearbyint(x)) {
    throw Error(ErrorKind::singularity, "lerch_closed_form_neg_int: e^{2 pi i x} = 1 is singular");
  }
  if (k < 0 || n < 0) {
    throw Error(ErrorKind::domain, "lerch_closed_form_neg_int: requires k >= 0 and n >= 0");
  }
  const Complex z = std::polar(1.0, two_pi * x);
  const Complex w = z / (z - 1.0);
  Complex outer = 0.0;
  Complex w_pow = 1.0;
  for (int q = 0; q <= k; ++q) {
    double inner = 0.0;
    for (int j = 0; j <= q; ++j) {
      const double sign = (j % 2 == 0) ? 1.0 : -1.0;
      inner += sign * std::pow(static_cast<double>(j + n + 1), k) / (factorial(j) * factorial(q - j));
    }
    outer += factorial(q) * w_pow * inner;
    w_pow *= w;
  }
  return -outer / (z - 1.0);
}

std::pair<Complex, Complex> binomial_recombination(Recombination kind, int k, Complex u, Complex v, Complex m,
                                                   const QuadratureSpec& spec) {
  if (k < 0) {
    throw Error(ErrorKind::domain, "binomial_recombination: requires integer k >= 0");
  }
  Complex left = 0.0;
  Complex right = 0.0;
  switch (kind) {
    case Recombination::lerch:
      left = lerch_phi_neg(k, m, u + v, spec).value;
      for (int j = 0; j <= k; ++j) {
        right += binomial(k, j) * lerch_phi_neg(j, m, v, spec).value * ipow(u, k - j);
      }
      break;
    case Recombination::polylog:
      left = std::exp(m) * lerch_phi_neg(k, m, u + 1.0, spec).value;
      for (int j = 0; j <= k; ++j) {
        right += binomial(k, j) * polylog_neg(j, m, spec).value * ipow(u, k - j);
      }
      break;
    case Recombination::hurwitz:
      left = hurwitz_zeta_neg(k, u + v, spec).value;
      right = -ipow(u, k + 1) / static_cast<double>(k + 1);
      for (int j = 0; j <= k; ++j) {
        right += binomial(k, j) * hurwitz_zeta_neg(j, v, spec).value * ipow(u, k - j);
      }
      break;
  }
  return {left, right};
}

Complex symbolic_trig_derivative(const TrigKind& t, int k, Complex x) {
  if (k < 0) {
    throw Error(ErrorKind::domain, "symbolic_trig_derivative: requires k >= 0");
  }
  const Complex a = t.frequency;
  // cot/csc ring: (i, j) -> cot^i csc^j, d cot = -a csc^2, d csc = -a csc cot.
  // tan/sec ring: (i, j) -> tan^i sec^j, d tan =  a sec^2, d sec =  a sec tan.
  const bool cot_ring = t.kind == TrigFunction::cot || t.kind == TrigFunction::csc;
  const Complex rate = cot_ring ? -a : a;
  TrigPolynomial poly;
  if (t.kind == TrigFunction::cot || t.kind == TrigFunction::tan) {
    poly[{1, 0}] = 1.0;
  } else {
    poly[{0, 1}] = 1.0;
  }
  for (int step = 0; step < k; ++step) {
    TrigPolynomial next;
    for (const auto& [powers, coeff] : poly) {
      const auto [i, j] = powers;
      if (i > 0) next[{i - 1, j + 2}] += rate * coeff * static_cast<double>(i);
      if (j > 0) next[{i + 1, j}] += rate * coeff * static_cast<double>(j);
    }
    poly = std::move(next);
  }
  const Complex theta = cot_ring ? a * x : a * x + t.phase;
  const Complex first = cot_ring ? std::cos(theta) / std::sin(theta) : std::sin(theta) / std::cos(theta);
  const Complex second = cot_ring ? 1.0 / std::sin(theta) : 1.0 / std::cos(theta);
  Complex value = 0.0;
  for (const auto& [powers, coeff] : poly) {
    value += coeff * ipow(first, powers.first) * ipow(second, powers.second);
  }
  return value;
}

}  // namespace specfun
