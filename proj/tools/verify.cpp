#include "verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <thread>
#include <utility>

#include "functions.hpp"
#include "specfun/alt_forms.hpp"
#include "specfun/continuation.hpp"
#include "specfun/elementary.hpp"
#include "specfun/gamma.hpp"
#include "specfun/oracles.hpp"
#include "specfun/partial_sums.hpp"
#include "specfun/quadrature.hpp"
#include "specfun/trig_derivs.hpp"

namespace specfun::cli {
namespace {

using nlohmann::json;
using Sides = std::pair<Complex, Complex>;  // (computed, reference)

struct Case {
  std::string id;
  std::string description;
  json params;
  std::function<Sides()> sides;
  double tolerance = 0.0;
  double floor = 0.0;  // lower bound on the reference magnitude in the relative measure
};

struct Outcome {
  Complex computed{NAN, NAN};
  Complex reference{NAN, NAN};
  double abs_discrepancy = NAN;
  double discrepancy = NAN;
  bool pass = false;
  std::string error;
};

json cj(Complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return nullptr;
  return {{"re", z.real()}, {"im", z.imag()}};
}

json real_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

// Uniform draws built directly on the 64-bit engine output so the case list
// does not depend on the standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  double uniform(double a, double b) { return a + (b - a) * static_cast<double>(gen_() >> 11) * 0x1p-53; }
  int integer(int lo, int hi) { return lo + static_cast<int>(gen_() % static_cast<std::uint64_t>(hi - lo + 1)); }
  Complex box(double re_lo, double re_hi, double im_lo, double im_hi) {
    const double re = uniform(re_lo, re_hi);
    return {re, uniform(im_lo, im_hi)};
  }
  // Imaginary part drawn from [lo, hi] with a random sign.
  double signed_magnitude(double lo, double hi) {
    const double v = uniform(lo, hi);
    return integer(0, 1) ? v : -v;
  }

 private:
  std::mt19937_64 gen_;
};

class SuiteBuilder {
 public:
  SuiteBuilder(std::string suite, std::uint64_t seed, std::vector<Case>& out)
      : suite_(std::move(suite)), rng_(seed ^ fnv1a(suite_)), out_(out), tolerance_(suite_tolerance(suite_)) {}

  Rng& rng() { return rng_; }

  void add(std::string description, json params, std::function<Sides()> sides, double floor = 0.0,
           double tolerance = 0.0) {
    char id[16];
    std::snprintf(id, sizeof id, "%04d", counter_++);
    out_.push_back({suite_ + "/" + id, std::move(description), std::move(params), std::move(sides),
                    tolerance > 0.0 ? tolerance : tolerance_, floor});
  }

 private:
  std::string suite_;
  Rng rng_;
  std::vector<Case>& out_;
  double tolerance_;
  int counter_ = 0;
};

constexpr int dirichlet_terms = 20000;
constexpr double euler_gamma = 0.57721566490153286061;

Complex zeta_series(Complex k) { return dirichlet_series_zeta(k, dirichlet_terms); }

// Exact Bernoulli number for any index (B_1 = -1/2, odd indices above 1 vanish).
double bernoulli_any(int j) {
  if (j == 1) return -0.5;
  if (j % 2 == 1) return 0.0;
  return static_cast<double>(bernoulli_exact(j));
}

// Richardson-extrapolated central difference of f at 0 (first or second derivative).
Complex richardson_derivative(const std::function<Complex(double)>& f, int order, double h) {
  auto d = [&](double s) {
    if (order == 1) return (f(s) - f(-s)) / (2.0 * s);
    return (f(s) - 2.0 * f(0.0) + f(-s)) / (s * s);
  };
  const Complex d1 = d(h), d2 = d(h / 2), d3 = d(h / 4);
  const Complex r1 = (4.0 * d2 - d1) / 3.0;
  const Complex r2 = (4.0 * d3 - d2) / 3.0;
  return (16.0 * r2 - r1) / 15.0;
}

// m drawn away from the singular line e^m = 1.
Complex draw_exponent(Rng& rng, double re_lo, double re_hi, double im_abs) {
  for (;;) {
    const Complex m = rng.box(re_lo, re_hi, -im_abs, im_abs);
    if (std::abs(m) > 0.2) return m;
  }
}

// k drawn away from the pole at k = -1.
Complex draw_order(Rng& rng, double re_lo, double re_hi, double im_abs) {
  for (;;) {
    const Complex k = rng.box(re_lo, re_hi, -im_abs, im_abs);
    if (std::abs(k + 1.0) > 0.3) return k;
  }
}

void kernel_suite(SuiteBuilder& s) {
  auto& rng = s.rng();
  for (int i = 0; i < 20; ++i) {
    const double x = std::pow(10.0, rng.uniform(-8.0, std::log10(30.0)));
    s.add("stable kernel form vs direct evaluation", {{"x", x}}, [x] {
      const double direct = x <= 0.5 ? 1.0 - std::cosh(pi * x) / std::sinh(pi * x)
                                     : -2.0 * std::exp(-two_pi * x) / (1.0 - std::exp(-two_pi * x));
      return Sides{kernel_value(x), direct};
    });
  }
  for (int p = 1; p <= 9; ++p) {
    s.add("kernel moment law", {{"p", p}}, [p] {
      auto h = [p](double x) -> Complex { return x == 0.0 ? Complex(p == 1 ? -1.0 / pi : 0.0) : kernel_value(x) * std::pow(x, p); };
      const Complex reference =
          -2.0 * std::pow(two_pi, -p - 1.0) * factorial(p) * zeta_series(static_cast<double>(p + 1));
      return Sides{integrate_exp_kernel(h, {}).value, reference};
    });
  }
  for (int i = 0; i < 8; ++i) {
    const Complex n = rng.box(0.5, 3.0, -0.5, 0.5);
    s.add("tan kernel first moment", {{"n", cj(n)}}, [n] {
      return Sides{integrate_tan_kernel([](double t) { return Complex(t); }, n, {}).value, -1.0 / (12.0 * n * n)};
    });
    s.add("tan kernel third moment", {{"n", cj(n)}}, [n] {
      return Sides{integrate_tan_kernel([](double t) { return Complex(t * t * t); }, n, {}).value,
                   -1.0 / (120.0 * ipow(n, 4))};
    });
  }
  for (int i = 0; i < 8; ++i) {
    const double n = rng.uniform(0.3, 4.0);
    s.add("csch^2 kernel second moment", {{"n", n}}, [n] {
      return Sides{integrate_csch2_kernel([](double t) { return Complex(t * t); }, n, {}).value,
                   1.0 / (6.0 * pi * n * n * n)};
    });
  }
  for (int i = 0; i < 8; ++i) {
    const double a = rng.uniform(0.2, 5.0);
    s.add("kernel sine transform", {{"a", a}}, [a] {
      auto h = [a](double x) -> Complex { return x == 0.0 ? Complex(-a / pi) : kernel_value(x) * std::sin(a * x); };
      return Sides{integrate_exp_kernel(h, {}).value, 1.0 / a - 0.5 / std::tanh(0.5 * a)};
    });
  }
  for (int i = 0; i < 8; ++i) {
    const Complex a = rng.box(-3.0, 3.0, -3.0, 3.0);
    s.add("finite interval exponential", {{"a", cj(a)}}, [a] {
      auto f = [a](double x) { return std::exp(a * x); };
      return Sides{integrate_interval(f, 0.0, 1.0, {}).value, cexpm1(a) / a};
    });
  }
  s.add("zero integrand", json::object(), [] {
    return Sides{integrate_exp_kernel([](double) { return Complex(0.0); }, {}).value, 0.0};
  }, 1.0);
}

void gamma_suite(SuiteBuilder& s) {
  auto& rng = s.rng();
  for (int n = 1; n <= 15; ++n) {
    s.add("Gamma at positive integers", {{"a", n}},
          [n] { return Sides{gamma_complete(static_cast<double>(n)), factorial(n - 1)}; });
  }
  for (int n = 0; n <= 10; ++n) {
    s.add("Gamma at half integers", {{"a", n + 0.5}}, [n] {
      return Sides{gamma_complete(n + 0.5), std::sqrt(pi) * factorial(2 * n) / (std::pow(4.0, n) * factorial(n))};
    });
  }
  for (int i = 0; i < 10; ++i) {
    const Complex z(rng.uniform(-4.0, 4.0), rng.signed_magnitude(0.2, 3.0));
    s.add("reflection formula", {{"z", cj(z)}},
          [z] { return Sides{gamma_complete(z) * gamma_complete(1.0 - z), pi / std::sin(pi * z)}; });
  }
  for (int i = 0; i < 10; ++i) {
    const Complex z = rng.box(-6.0, 6.0, -4.0, 4.0);
    s.add("Gamma recurrence", {{"z", cj(z)}},
          [z] { return Sides{gamma_complete(z + 1.0), z * gamma_complete(z)}; });
  }
  for (int i = 0; i < 20; ++i) {
    Complex a, z;
    do {
      a = rng.box(-7.0, 7.0, -7.0, 7.0);
      z = rng.box(-7.0, 7.0, -7.0, 7.0);
    } while (std::abs(a) > 10.0 || std::abs(z) > 10.0 || std::abs(z) < 0.1 || is_nonpositive_integer(a));
    const double floor = std::max(std::abs(a * gamma_upper(a, z)), std::abs(cpow(z, a) * std::exp(-z)));
    s.add("incomplete gamma recurrence", {{"a", cj(a)}, {"z", cj(z)}}, [a, z] {
      return Sides{gamma_upper(a + 1.0, z), a * gamma_upper(a, z) + cpow(z, a) * std::exp(-z)};
    }, floor);
  }
  for (int p = 0; p < 12; ++p) {
    for (int i = 0; i < 2; ++i) {
      const Complex z = rng.box(-8.0, 8.0, -8.0, 8.0);
      s.add("incomplete gamma finite form", {{"a", p + 1}, {"z", cj(z)}}, [p, z] {
        Complex sum = 0.0, term = 1.0;
        for (int j = 0; j <= p; ++j) {
          sum += term;
          term *= z / static_cast<double>(j + 1);
        }
        return Sides{gamma_upper(p + 1.0, z), factorial(p) * std::exp(-z) * sum};
      });
    }
  }
  for (int i = 0; i < 10; ++i) {
    const Complex a = rng.box(-5.0, 5.0, -5.0, 5.0);
    const Complex z = rng.box(-5.0, 7.0, -6.0, 6.0);
    s.add("incomplete gamma conjugation", {{"a", cj(a)}, {"z", cj(z)}},
          [a, z] { return Sides{gamma_upper(std::conj(a), std::conj(z)), std::conj(gamma_upper(a, z))}; });
  }
  for (int i = 0; i < 8; ++i) {
    const double x = rng.uniform(0.05, 25.0);
    s.add("Gamma(1/2, x) via erfc", {{"x", x}},
          [x] { return Sides{gamma_upper(0.5, x), std::sqrt(pi) * std::erfc(std::sqrt(x))}; });
  }
  for (int i = 0; i < 6; ++i) {
    const Complex b(rng.uniform(-4.0, 4.0), rng.signed_magnitude(0.1, 4.0));
    const Complex e = rng.box(-3.0, 3.0, -3.0, 3.0);
    s.add("cpow conjugation", {{"base", cj(b)}, {"exponent", cj(e)}},
          [b, e] { return Sides{cpow(std::conj(b), std::conj(e)), std::conj(cpow(b, e))}; });
  }
  s.add("cpow principal square root of -1", json::object(), [] { return Sides{cpow(-1.0, 0.5), imag_unit}; });
  s.add("cpow integer power", json::object(), [] { return Sides{cpow({1.0, 1.0}, 2.0), {0.0, 2.0}}; });
  s.add("Gamma(2, 1)", json::object(), [] { return Sides{gamma_upper(2.0, 1.0), 2.0 * std::exp(-1.0)}; });
  s.add("Gamma(3, 0)", json::object(), [] { return Sides{gamma_upper(3.0, 0.0), 2.0}; });
}

void zeta_suite(SuiteBuilder& s) {
  auto& rng = s.rng();
  for (int i = 0; i < 25; ++i) {
    const Complex k = rng.box(1.5, 8.0, -5.0, 5.0);
    s.add("zeta vs Dirichlet series", {{"k", cj(k)}}, [k] { return Sides{zeta(k).value, zeta_series(k)}; });
  }
  for (int i = 0; i < 10; ++i) {
    const Complex k = rng.box(1.5, 8.0, -3.0, 3.0);
    s.add("zeta vs literature integral", {{"k", cj(k)}},
          [k] { return Sides{zeta(k).value, literature_integral_zeta(k).value}; });
  }
  for (int i = 0; i < 25; ++i) {
    const Complex k(rng.uniform(0.5, 6.0), rng.signed_magnitude(0.5, 3.0));
    s.add("functional equation", {{"k", cj(k)}}, [k] {
      const Complex reference = 2.0 * gamma_complete(k + 1.0) * cpow(two_pi, -k - 1.0) *
                                std::cos((k + 1.0) * pi / 2.0) * zeta_series(k + 1.0);
      return Sides{zeta(-k).value, reference};
    });
  }
  s.add("zeta(-1)", json::object(), [] { return Sides{zeta(-1.0).value, -1.0 / 12.0}; });
  s.add("zeta(-2) trivial zero", json::object(), [] { return Sides{zeta(-2.0).value, 0.0}; }, 1.0);
  s.add("zeta(0)", json::object(), [] { return Sides{zeta(0.0).value, -0.5}; });
  s.add("zeta(2)", json::object(), [] { return Sides{zeta(2.0).value, pi * pi / 6.0}; });
  s.add("zeta(4)", json::object(), [] { return Sides{zeta(4.0).value, std::pow(pi, 4) / 90.0}; });
  s.add("zeta(1) without pole term", json::object(),
        [] { return Sides{zeta(1.0, {}, PoleTerm::exclude).value, euler_gamma}; });
  auto zeta_real = [](double k) { return zeta(k).value; };
  s.add("zeta'(0) vs finite difference", {{"q", 1}}, [zeta_real] {
    return Sides{zeta_derivative_at_zero(1).value, richardson_derivative(zeta_real, 1, 0.02)};
  }, 0.0, 1e-6);
  s.add("zeta''(0) vs finite difference", {{"q", 2}}, [zeta_real] {
    return Sides{zeta_derivative_at_zero(2).value, richardson_derivative(zeta_real, 2, 0.02)};
  }, 0.0, 1e-6);
  s.add("zeta'(0) = -log(2 pi)/2", {{"q", 1}},
        [] { return Sides{zeta_derivative_at_zero(1).value, -0.5 * std::log(two_pi)}; });
  for (int j = 0; j <= 20; j += 2) {
    s.add("Bernoulli via zeta vs exact recurrence", {{"j", j}},
          [j] { return Sides{bernoulli(j), static_cast<double>(bernoulli_exact(j))}; });
  }
  for (int i = 0; i < 8; ++i) {
    const Complex k = rng.box(-6.0, 6.0, -4.0, 4.0);
    s.add("zeta conjugation", {{"k", cj(k)}},
          [k] { return Sides{zeta(std::conj(k)).value, std::conj(zeta(k).value)}; }, 1.0);
  }
}

void hurwitz_suite(SuiteBuilder& s) {
  auto& rng = s.rng();
  for (int i = 0; i < 12; ++i) {
    const Complex k = draw_order(rng, -4.0, 4.0, 2.0);
    s.add("zeta(-k, 1) = zeta(-k)", {{"k", cj(k)}},
          [k] { return Sides{hurwitz_zeta_neg(k, 1.0).value, zeta(-k).value}; }, 1.0);
  }
  for (int i = 0; i < 12; ++i) {
    const Complex k = draw_order(rng, -3.0, 3.0, 2.0);
    const Complex b = rng.box(0.2, 3.0, -1.0, 1.0);
    s.add("forward difference in b", {{"k", cj(k)}, {"b", cj(b)}}, [k, b] {
      return Sides{hurwitz_zeta_neg(k, b).value - hurwitz_zeta_neg(k, b + 1.0).value, cpow(b, k)};
    }, 1.0);
  }
  for (int k = 0; k <= 8; ++k) {
    const Complex b = rng.box(0.2, 3.0, -1.0, 1.0);
    s.add("Bernoulli polynomial values", {{"k", k}, {"b", cj(b)}}, [k, b] {
      Complex poly = 0.0;
      for (int j = 0; j <= k + 1; ++j) poly += binomial(k + 1, j) * bernoulli_any(j) * ipow(b, k + 1 - j);
      return Sides{hurwitz_zeta_neg(static_cast<double>(k), b).value, -poly / static_cast<double>(k + 1)};
    }, 1.0);
  }
  for (int i = 0; i < 8; ++i) {
    const Complex k = draw_order(rng, -4.0, 4.0, 2.0);
    s.add("zeta(-k, 1/2) = (2^-k - 1) zeta(-k)", {{"k", cj(k)}}, [k] {
      return Sides{hurwitz_zeta_neg(k, 0.5).value, (cpow(2.0, -k) - 1.0) * zeta(-k).value};
    }, 1.0);
  }
  for (int i = 0; i < 6; ++i) {
    const Complex k = draw_order(rng, -4.0, 4.0, 2.0);
    const Complex b = rng.box(0.2, 3.0, -1.0, 1.0);
    s.add("Hurwitz conjugation", {{"k", cj(k)}, {"b", cj(b)}}, [k, b] {
      return Sides{hurwitz_zeta_neg(std::conj(k), std::conj(b)).value, std::conj(hurwitz_zeta_neg(k, b).value)};
    }, 1.0);
  }
  s.add("zeta(0, 1/4)", json::object(), [] { return Sides{hurwitz_zeta_neg(0.0, 0.25).value, 0.25}; });
  s.add("zeta(-2, 1)", json::object(), [] { return Sides{hurwitz_zeta_neg(2.0, 1.0).value, 0.0}; }, 1.0);
  s.add("zeta(-1, 1)", json::object(), [] { return Sides{hurwitz_zeta_neg(1.0, 1.0).value, -1.0 / 12.0}; });
}

void polylog_suite(SuiteBuilder& s) {
  auto& rng = s.rng();
  for (int i = 0; i < 20; ++i) {
    const Complex k = rng.box(-4.0, 4.0, -2.0, 2.0);
    const Complex m = rng.box(-2.3, -0.11, -3.1, 3.1);
    s.add("polylog vs convergent series", {{"k", cj(k)}, {"m", cj(m)}}, [k, m] {
      const int terms = static_cast<int>(std::ceil(80.0 / -m.real()));
      return Sides{polylog_neg(k, m).value, brute_partial_sum(k, m, 0.0, terms, 1)};
    }, 1.0);
  }
  for (int i = 0; i < 8; ++i) {
    const Complex m = draw_exponent(rng, -2.0, 2.0, 3.1);
    const Complex z = std::exp(m);
    s.add("Li_0 closed form", {{"m", cj(m)}}, [m, z] { return Sides{polylog_neg(0.0, m).value, z / (1.0 - z)}; });
    s.add("Li_1 closed form", {{"m", cj(m)}},
          [m, z] { return Sides{polylog_neg(1.0, m).value, z / ((1.0 - z) * (1.0 - z))}; });
  }
  for (int i = 0; i < 10; ++i) {
    const Complex k = rng.box(-3.0, 4.0, -2.0, 2.0);
    Complex m;
    do {
      m = rng.box(-1.5, 1.0, -3.1, 3.1);
    } while (std::abs(cexpm1(m)) < 0.2 || std::abs(cexpm1(2.0 * m)) < 0.2 || std::abs(1.0 + std::exp(m)) < 0.2);
    s.add("duplication formula", {{"k", cj(k)}, {"m", cj(m)}}, [k, m] {
      const Complex left = polylog_neg(k, m).value + polylog_neg(k, m + imag_unit * pi).value;
      return Sides{left, cpow(2.0, 1.0 + k) * polylog_neg(k, 2.0 * m).value};
    }, 1.0);
  }
  for (int i = 0; i < 10; ++i) {
    const int k = rng.integer(1, 6);
    const Complex m = draw_exponent(rng, -2.0, 2.0, 3.1);
    s.add("inversion at integer order", {{"k", k}, {"m", cj(m)}}, [k, m] {
      const double sign = (k % 2 == 0) ? 1.0 : -1.0;
      return Sides{polylog_neg(k, m).value, -sign * polylog_neg(k, -m).value};
    }, 1.0);
  }
  for (int i = 0; i < 6; ++i) {
    const Complex k = rng.box(-4.0, 4.0, -2.0, 2.0);
    const Complex m = draw_exponent(rng, -2.0, 0.3, 3.0);
    s.add("polylog conjugation", {{"k", cj(k)}, {"m", cj(m)}}, [k, m] {
      return Sides{polylog_neg(std::conj(k), std::conj(m)).value, std::conj(polylog_neg(k, m).value)};
    }, 1.0);
  }
  const double half = std::log(0.5);
  s.add("Li_0(1/2)", json::object(), [half] { return Sides{polylog_neg(0.0, half).value, 1.0}; });
  s.add("Li_-1(1/2)", json::object(), [half] { return Sides{polylog_neg(1.0, half).value, 2.0}; });
}

void lerch_suite(SuiteBuilder& s) {
  auto& rng = s.rng();
  for (int i = 0; i < 15; ++i) {
    const Complex k = rng.box(-4.0, 4.0, -2.0, 2.0);
    const Complex m = rng.box(-2.3, -0.11, -3.1, 3.1);
    const Complex b = rng.box(0.2, 3.0, -1.0, 1.0);
    s.add("Lerch vs convergent series", {{"k", cj(k)}, {"m", cj(m)}, {"b", cj(b)}}, [k, m, b] {
      const int terms = static_cast<int>(std::ceil(80.0 / -m.real()));
      return Sides{lerch_phi_neg(k, m, b).value, brute_partial_sum(k, m, b, terms, 0)};
    }, 1.0);
  }
  for (int i = 0; i < 8; ++i) {
    const Complex k = rng.box(-4.0, 4.0, -2.0, 2.0);
    const Complex m = draw_exponent(rng, -2.0, 1.0, 3.1);
    s.add("Phi(z, -k, 1) = Li_{-k}(z) / z", {{"k", cj(k)}, {"m", cj(m)}}, [k, m] {
      return Sides{lerch_phi_neg(k, m, 1.0).value, std::exp(-m) * polylog_neg(k, m).value};
    }, 1.0);
  }
  for (int i = 0; i < 8; ++i) {
    const Complex k = rng.box(-3.0, 3.0, -2.0, 2.0);
    const Complex m = draw_exponent(rng, -2.0, 1.0, 3.1);
    const Complex b = rng.box(0.2, 3.0, -1.0, 1.0);
    s.add("shift in b", {{"k", cj(k)}, {"m", cj(m)}, {"b", cj(b)}}, [k, m, b] {
      return Sides{lerch_phi_neg(k, m, b).value, cpow(b, k) + std::exp(m) * lerch_phi_neg(k, m, b + 1.0).value};
    }, 1.0);
  }
  for (int i = 0; i < 12; ++i) {
    const int k = rng.integer(0, 6);
    const int n = rng.integer(0, 5);
    const double x = rng.uniform(0.05, 0.95);
    s.add("unit circle vs finite closed form", {{"k", k}, {"n", n}, {"x", x}}, [k, n, x] {
      return Sides{lerch_phi_neg(k, Complex(0.0, two_pi * x), n + 1.0).value, lerch_closed_form_neg_int(x, k, n)};
    }, 1.0);
  }
  for (int i = 0; i < 6; ++i) {
    const Complex k = rng.box(-4.0, 4.0, -2.0, 2.0);
    const Complex m = draw_exponent(rng, -2.0, 0.3, 3.0);
    const Complex b = rng.box(0.2, 3.0, -1.0, 1.0);
    s.add("Lerch conjugation", {{"k", cj(k)}, {"m", cj(m)}, {"b", cj(b)}}, [k, m, b] {
      return Sides{lerch_phi_neg(std::conj(k), std::conj(m), std::conj(b)).value,
                   std::conj(lerch_phi_neg(k, m, b).value)};
    }, 1.0);
  }
  const double half = std::log(0.5);
  s.add("Phi(1/2, 0, 1.7)", json::object(), [half] { return Sides{lerch_phi_neg(0.0, half, 1.7).value, 2.0}; });
  s.add("Phi(1/2, -1, 1)", json::object(), [half] { return Sides{lerch_phi_neg(1.0, half, 1.0).value, 4.0}; });
}

void partial_sums_suite(SuiteBuilder& s) {
  auto& rng = s.rng();
  for (int i = 0; i < 15; ++i) {
    const Complex k = draw_order(rng, -3.0, 3.0, 2.0);
    const Complex n = rng.box(-0.5, 6.0, -2.0, 2.0);
    s.add("zeta telescoping", {{"k", cj(k)}, {"n", cj(n)}}, [k, n] {
      return Sides{harmonic_sum(k, n).value, zeta(-k).value - hurwitz_zeta_neg(k, n + 1.0).value};
    }, 1.0);
  }
  for (int i = 0; i < 15; ++i) {
    const Complex k = draw_order(rng, -3.0, 3.0, 2.0);
    const Complex b = rng.box(0.2, 3.0, -1.0, 1.0);
    const Complex n = rng.box(-0.5, 6.0, -2.0, 2.0);
    s.add("Hurwitz telescoping", {{"k", cj(k)}, {"b", cj(b)}, {"n", cj(n)}}, [k, b, n] {
      return Sides{hurwitz_partial(k, b, n).value,
                   hurwitz_zeta_neg(k, b).value - hurwitz_zeta_neg(k, n + 1.0 + b).value};
    }, 1.0);
  }
  for (int i = 0; i < 15; ++i) {
    const Complex k = rng.box(-3.0, 3.0, -2.0, 2.0);
    const Complex m = draw_exponent(rng, -2.0, 0.3, 3.0);
    const Complex n = rng.box(-0.5, 6.0, -2.0, 2.0);
    s.add("polylog telescoping", {{"k", cj(k)}, {"m", cj(m)}, {"n", cj(n)}}, [k, m, n] {
      const Complex reference =
          polylog_neg(k, m).value - std::exp(m * (n + 1.0)) * lerch_phi_neg(k, m, n + 1.0).value;
      return Sides{polylog_partial(k, m, n).value, reference};
    }, 1.0);
  }
  for (int i = 0; i < 15; ++i) {
    const Complex k = rng.box(-3.0, 3.0, -2.0, 2.0);
    const Complex m = draw_exponent(rng, -2.0, 0.3, 3.0);
    const Complex b = rng.box(0.2, 3.0, -1.0, 1.0);
    const Complex n = rng.box(-0.5, 6.0, -2.0, 2.0);
    s.add("Lerch telescoping", {{"k", cj(k)}, {"m", cj(m)}, {"b", cj(b)}, {"n", cj(n)}}, [k, m, b, n] {
      const Complex reference =
          lerch_phi_neg(k, m, b).value - std::exp(m * (n + 1.0)) * lerch_phi_neg(k, m, n + 1.0 + b).value;
      return Sides{lerch_partial(k, m, b, n).value, reference};
    }, 1.0);
  }
  for (int i = 0; i < 20; ++i) {
    const int k = rng.integer(0, 8);
    const int n = rng.integer(1, 20);
    s.add("harmonic sum vs brute sum", {{"k", k}, {"n", n}}, [k, n] {
      return Sides{harmonic_sum(static_cast<double>(k), static_cast<double>(n)).value,
                   brute_partial_sum(static_cast<double>(k), 0.0, 0.0, n, 1)};
    });
  }
  for (int i = 0; i < 8; ++i) {
    const int k = rng.integer(1, 5);
    const int n = rng.integer(1, 20);
    s.add("Faulhaber polynomial vs brute sum", {{"k", k}, {"n", n}}, [k, n] {
      return Sides{faulhaber_odd(k, static_cast<double>(n)), brute_partial_sum(2.0 * k - 1.0, 0.0, 0.0, n, 1)};
    });
  }
  for (int i = 0; i < 8; ++i) {
    const Complex k = rng.box(-2.0, 3.0, -2.0, 2.0);
    const Complex b = rng.box(0.2, 3.0, -1.0, 1.0);
    const int n = rng.integer(0, 8);
    s.add("Hurwitz partial sum vs brute sum", {{"k", cj(k)}, {"b", cj(b)}, {"n", n}}, [k, b, n] {
      return Sides{hurwitz_partial(k, b, static_cast<double>(n)).value, brute_partial_sum(k, 0.0, b, n, 0)};
    }, 1.0);
  }
  for (int i = 0; i < 8; ++i) {
    const Complex k = rng.box(-2.0, 3.0, -2.0, 2.0);
    const Complex m = draw_exponent(rng, -2.0, 0.5, 6.0);
    const int n = rng.integer(1, 8);
    s.add("polylog partial sum vs brute sum", {{"k", cj(k)}, {"m", cj(m)}, {"n", n}}, [k, m, n] {
      return Sides{polylog_partial(k, m, static_cast<double>(n)).value, brute_partial_sum(k, m, 0.0, n, 1)};
    }, 1.0);
  }
  for (int i = 0; i < 8; ++i) {
    const Complex k = rng.box(-2.0, 3.0, -2.0, 2.0);
    const Complex m = draw_exponent(rng, -2.0, 0.5, 6.0);
    const Complex b = rng.box(0.2, 3.0, -1.0, 1.0);
    const int n = rng.integer(0, 8);
    s.add("Lerch partial sum vs brute sum", {{"k", cj(k)}, {"m", cj(m)}, {"b", cj(b)}, {"n", n}}, [k, m, b, n] {
      return Sides{lerch_partial(k, m, b, static_cast<double>(n)).value, brute_partial_sum(k, m, b, n, 0)};
    }, 1.0);
  }
  for (int i = 0; i < 8; ++i) {
    const int k = rng.integer(1, 4);
    const Complex n = rng.box(0.5, 5.0, -1.0, 1.0);
    s.add("key sum vs direct sum", {{"k", k}, {"n", cj(n)}}, [k, n] {
      Complex direct = -0.5 / factorial(2 * k);
      for (int j = 1; j <= k; ++j) {
        direct += ipow(2.0 * pi * imag_unit * n, -2 * j) * zeta_series(2.0 * j) / factorial(2 * k - 2 * j);
      }
      return Sides{key_sum(k, n).value, direct};
    }, 1.0);
  }
  for (int i = 0; i < 8; ++i) {
    const int k = rng.integer(1, 3);
    const Complex n = rng.box(-0.5, 4.0, -1.0, 1.0);
    s.add("Lerch limit = zeta(1-2k, n+1)", {{"k", k}, {"n", cj(n)}}, [k, n] {
      return Sides{lerch_limit(k, n).value, hurwitz_zeta_neg(2.0 * k - 1.0, n + 1.0).value};
    }, 1.0);
  }
  s.add("sum of squares to 3", json::object(), [] { return Sides{harmonic_sum(2.0, 3.0).value, 14.0}; });
  s.add("sum of cubes to 10", json::object(), [] { return Sides{harmonic_sum(3.0, 10.0).value, 3025.0}; });
  s.add("sum of square roots to 2", json::object(),
        [] { return Sides{harmonic_sum(0.5, 2.0).value, 1.0 + std::sqrt(2.0)}; });
  s.add("key sum k=1 n=1", json::object(), [] { return Sides{key_sum(1, 1.0).value, -7.0 / 24.0}; });
  s.add("Lerch limit k=1 n=1", json::object(), [] { return Sides{lerch_limit(1, 1.0).value, -13.0 / 12.0}; });
  s.add("Lerch limit k=2 n=0", json::object(), [] { return Sides{lerch_limit(2, 0.0).value, 1.0 / 120.0}; });
}

// Two-level Richardson extrapolation of the Lerch combination over x = h, h/10, h/100.
Complex extrapolated_lerch_combination(int k, Complex n) {
  const Complex a = lerch_limit_combination(k, n, 1e-2).value;
  const Complex b = lerch_limit_combination(k, n, 1e-3).value;
  const Complex c = lerch_limit_combination(k, n, 1e-4).value;
  const Complex ab = (10.0 * b - a) / 9.0;
  const Complex bc = (10.0 * c - b) / 9.0;
  return (100.0 * bc - ab) / 99.0;
}

void alt_agreement_suite(SuiteBuilder& s) {
  auto& rng = s.rng();
  for (int i = 0; i < 10; ++i) {
    const Complex k = draw_order(rng, -2.0, 4.0, 1.5);
    const double n = rng.uniform(0.5, 8.0);
    s.add("tan-kernel harmonic sum vs centered formula", {{"k", cj(k)}, {"n", n}},
          [k, n] { return Sides{harmonic_sum_v2(k, n).value, harmonic_sum(k, n).value}; }, 1.0);
  }
  for (int i = 0; i < 10; ++i) {
    const Complex k = draw_order(rng, -2.0, 4.0, 1.5);
    const double n = rng.uniform(0.5, 8.0);
    s.add("csch^2 harmonic sum vs centered formula", {{"k", cj(k)}, {"n", n}},
          [k, n] { return Sides{harmonic_sum_v1(k, n).value, harmonic_sum(k, n).value}; }, 1.0);
  }
  for (int i = 0; i < 25; ++i) {
    const Complex k = draw_order(rng, -2.0, 3.0, 1.5);
    const Complex b = rng.box(0.2, 3.0, -0.5, 0.5);
    const double n = rng.uniform(0.5, 6.0);
    s.add("Hurwitz partial sum, both families", {{"k", cj(k)}, {"b", cj(b)}, {"n", n}},
          [k, b, n] { return Sides{hurwitz_partial_alt(k, b, n).value, hurwitz_partial(k, b, n).value}; }, 1.0);
  }
  for (int i = 0; i < 25; ++i) {
    const Complex k = rng.box(-2.0, 3.0, -1.5, 1.5);
    const Complex m = draw_exponent(rng, -2.0, 0.3, 3.0);
    const double n = rng.uniform(0.5, 6.0);
    s.add("polylog partial sum, both families", {{"k", cj(k)}, {"m", cj(m)}, {"n", n}},
          [k, m, n] { return Sides{polylog_partial_alt(k, m, n).value, polylog_partial(k, m, n).value}; }, 1.0);
  }
  for (int i = 0; i < 25; ++i) {
    const Complex k = rng.box(-2.0, 3.0, -1.5, 1.5);
    const Complex m = draw_exponent(rng, -2.0, 0.3, 3.0);
    const Complex b = rng.box(0.2, 3.0, -0.5, 0.5);
    const double n = rng.uniform(0.5, 6.0);
    s.add("Lerch partial sum, both families", {{"k", cj(k)}, {"m", cj(m)}, {"b", cj(b)}, {"n", n}}, [k, m, b, n] {
      return Sides{lerch_partial_alt(k, m, b, n).value, lerch_partial(k, m, b, n).value};
    }, 1.0);
  }
  for (int k = 0; k <= 6; ++k) {
    for (int n = 0; n <= 5; ++n) {
      for (int j = 1; j <= 2; ++j) {
        const double x = j / 3.0;
        s.add("unit-circle Lerch vs finite closed form", {{"k", k}, {"n", n}, {"x", x}}, [k, n, x] {
          return Sides{lerch_unit_circle(x, k, n).value, lerch_closed_form_neg_int(x, k, n)};
        }, 1.0);
      }
      s.add("unit-circle Lerch vs finite closed form", {{"k", k}, {"n", n}, {"x", 0.5}}, [k, n] {
        return Sides{lerch_unit_circle(0.5, k, n).value, lerch_closed_form_neg_int(0.5, k, n)};
      }, 1.0);
    }
  }
  for (int k = 1; k <= 3; ++k) {
    for (int n = 0; n <= 2; ++n) {
      s.add("extrapolated Lerch combination vs limit", {{"k", k}, {"n", n}}, [k, n] {
        return Sides{extrapolated_lerch_combination(k, n), lerch_limit(k, n).value};
      }, 1.0, 1e-6);
    }
  }
}

const char* trig_name(TrigFunction f) {
  switch (f) {
    case TrigFunction::cot: return "cot";
    case TrigFunction::csc: return "csc";
    case TrigFunction::tan: return "tan";
    case TrigFunction::sec: return "sec";
  }
  return "?";
}

// A point where the function is at least 0.2 away (in |sin| or |cos|) from a pole.
Complex draw_trig_point(Rng& rng, const TrigKind& t) {
  const bool cot_ring = t.kind == TrigFunction::cot || t.kind == TrigFunction::csc;
  for (;;) {
    const Complex x = rng.box(-3.0, 3.0, -0.4, 0.4);
    const Complex theta = cot_ring ? t.frequency * x : t.frequency * x + t.phase;
    if (std::abs(cot_ring ? std::sin(theta) : std::cos(theta)) > 0.2) return x;
  }
}

void trig_suite(SuiteBuilder& s) {
  auto& rng = s.rng();
  const TrigFunction kinds[] = {TrigFunction::cot, TrigFunction::csc, TrigFunction::tan, TrigFunction::sec};
  for (TrigFunction f : kinds) {
    for (int k = 0; k <= 4; ++k) {
      for (int i = 0; i < 4; ++i) {
        TrigKind t{f, rng.uniform(0.5, 2.0), 0.0};
        if (f == TrigFunction::tan || f == TrigFunction::sec) t.phase = rng.uniform(-1.0, 1.0);
        const Complex x = draw_trig_point(rng, t);
        s.add("closed form vs symbolic differentiation",
              {{"kind", trig_name(f)}, {"k", k}, {"a", cj(t.frequency)}, {"phase", cj(t.phase)}, {"x", cj(x)}},
              [t, k, x] { return Sides{trig_deriv(t, k, x).value, symbolic_trig_derivative(t, k, x)}; }, 1.0);
      }
    }
  }
  for (TrigFunction f : kinds) {
    for (int k = 1; k <= 4; ++k) {
      TrigKind t{f, rng.uniform(0.5, 2.0), 0.0};
      if (f == TrigFunction::tan || f == TrigFunction::sec) t.phase = rng.uniform(-1.0, 1.0);
      const Complex x = draw_trig_point(rng, t);
      s.add("closed form vs finite difference of the previous order",
            {{"kind", trig_name(f)}, {"k", k}, {"a", cj(t.frequency)}, {"phase", cj(t.phase)}, {"x", cj(x)}},
            [t, k, x] {
              auto prev = [&](double h) { return trig_deriv(t, k - 1, x + h).value; };
              return Sides{trig_deriv(t, k, x).value, richardson_derivative(prev, 1, 2e-3)};
            }, 1.0);
    }
  }
  for (int i = 0; i < 8; ++i) {
    const int k = rng.integer(0, 4);
    const TrigKind tan_kind{TrigFunction::tan, rng.uniform(0.5, 2.0), rng.uniform(-1.0, 1.0)};
    const Complex x = draw_trig_point(rng, tan_kind);
    s.add("tan derivative as shifted cot derivative",
          {{"k", k}, {"a", cj(tan_kind.frequency)}, {"phase", cj(tan_kind.phase)}, {"x", cj(x)}}, [tan_kind, k, x] {
            const TrigKind cot_kind{TrigFunction::cot, -tan_kind.frequency, 0.0};
            const Complex shifted = x - (pi / 2.0 - tan_kind.phase) / tan_kind.frequency;
            return Sides{trig_deriv(tan_kind, k, x).value, trig_deriv(cot_kind, k, shifted).value};
          }, 1.0);
  }
  for (double x : {0.0, 0.25, 0.5}) {
    s.add("even zeta generating function, 60 terms", {{"x", x}}, [x] {
      const auto [series, closed] = even_zeta_gf(x, 60);
      return Sides{series, closed};
    }, 1.0);
  }
  for (int j = 0; j <= 3; ++j) {
    s.add("negative zeta generating function Laurent coefficient", {{"j", j}}, [j] {
      // Cauchy integral on |x| = 1 with the trapezoid rule (64 nodes).
      constexpr int nodes = 64;
      Complex coeff = 0.0;
      for (int q = 0; q < nodes; ++q) {
        const Complex w = std::polar(1.0, two_pi * q / nodes);
        coeff += neg_zeta_gf(w).value * ipow(w, -j);
      }
      coeff /= static_cast<double>(nodes);
      return Sides{coeff * factorial(j), zeta(-static_cast<double>(j)).value};
    }, 1.0);
  }
  s.add("negative zeta generating function vs Bernoulli series", {{"x", 1.0}}, [] {
    Complex series = 0.0;
    for (int j = 0; j <= 40; ++j) {
      const double zeta_neg = j == 0 ? -0.5 : ((j % 2 == 0) ? 0.0 : -bernoulli_any(j + 1) / (j + 1));
      series += zeta_neg / factorial(j);
    }
    return Sides{neg_zeta_gf(1.0).value, series};
  }, 1.0);
}

void identities_suite(SuiteBuilder& s) {
  auto& rng = s.rng();
  const std::pair<Recombination, const char*> kinds[] = {
      {Recombination::lerch, "lerch"}, {Recombination::polylog, "polylog"}, {Recombination::hurwitz, "hurwitz"}};
  for (const auto& [kind, name] : kinds) {
    for (int i = 0; i < 50; ++i) {
      const int k = rng.integer(0, 6);
      const Complex u = rng.box(0.2, 2.5, -1.0, 1.0);
      const Complex v = rng.box(0.2, 2.5, -1.0, 1.0);
      const Complex m = kind == Recombination::hurwitz ? Complex(0.0) : draw_exponent(rng, -2.0, 0.3, 3.1);
      const Recombination which = kind;
      s.add(std::string("binomial recombination, ") + name,
            {{"kind", name}, {"k", k}, {"u", cj(u)}, {"v", cj(v)}, {"m", cj(m)}},
            [which, k, u, v, m] { return binomial_recombination(which, k, u, v, m); }, 1.0);
    }
  }
}

using SuiteFn = void (*)(SuiteBuilder&);

const std::vector<std::pair<std::string, SuiteFn>>& suites() {
  static const std::vector<std::pair<std::string, SuiteFn>> table = {
      {"alt-agreement", alt_agreement_suite}, {"gamma", gamma_suite},           {"hurwitz", hurwitz_suite},
      {"identities", identities_suite},       {"kernel", kernel_suite},         {"lerch", lerch_suite},
      {"partial-sums", partial_sums_suite},   {"polylog", polylog_suite},       {"trig", trig_suite},
      {"zeta", zeta_suite}};
  return table;
}

Outcome evaluate(const Case& c) {
  Outcome o;
  try {
    const auto [computed, reference] = c.sides();
    o.computed = computed;
    o.reference = reference;
    o.abs_discrepancy = std::abs(computed - reference);
    double scale = std::max(std::abs(reference), c.floor);
    if (scale == 0.0) scale = 1.0;
    o.discrepancy = o.abs_discrepancy / scale;
    o.pass = std::isfinite(o.discrepancy) && o.discrepancy <= c.tolerance;
  } catch (const Error& e) {
    o.error = std::string(to_string(e.kind())) + ": " + e.what();
  } catch (const std::exception& e) {
    o.error = e.what();
  }
  return o;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, fn] : suites()) v.push_back(name);
    return v;
  }();
  return names;
}

double suite_tolerance(const std::string& suite) {
  static const std::map<std::string, double> tolerances = {
      {"kernel", 1e-10}, {"gamma", 1e-10},        {"zeta", 1e-9},          {"hurwitz", 1e-9}, {"polylog", 1e-8},
      {"lerch", 1e-8},   {"partial-sums", 1e-8}, {"alt-agreement", 1e-7}, {"trig", 1e-6},    {"identities", 1e-8}};
  const auto it = tolerances.find(suite);
  if (it == tolerances.end()) throw UsageError("unknown suite '" + suite + "'");
  return it->second;
}

VerifySummary run_verification(const VerifyOptions& options) {
  std::vector<Case> cases;
  bool found = false;
  for (const auto& [name, fn] : suites()) {
    if (options.suite == "all" || options.suite == name) {
      SuiteBuilder builder(name, options.seed, cases);
      fn(builder);
      found = true;
    }
  }
  if (!found) throw UsageError("unknown suite '" + options.suite + "'");
  if (options.tolerance) {
    for (auto& c : cases) c.tolerance = *options.tolerance;
  }
  std::sort(cases.begin(), cases.end(), [](const Case& l, const Case& r) { return l.id < r.id; });

  const auto start = std::chrono::steady_clock::now();
  std::vector<Outcome> outcomes(cases.size());
  const int jobs = std::max(1, std::min<int>(options.jobs, static_cast<int>(cases.size())));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cases.size(); i = next++) outcomes[i] = evaluate(cases[i]);
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  VerifySummary summary;
  json list = json::array();
  double worst = 0.0;
  std::string worst_id;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const Case& c = cases[i];
    const Outcome& o = outcomes[i];
    json entry = {{"id", c.id},
                  {"description", c.description},
                  {"params", c.params},
                  {"computed", cj(o.computed)},
                  {"reference", cj(o.reference)},
                  {"abs_discrepancy", real_or_null(o.abs_discrepancy)},
                  {"discrepancy", real_or_null(o.discrepancy)},
                  {"tolerance", c.tolerance},
                  {"pass", o.pass}};
    if (!o.error.empty()) entry["error"] = o.error;
    list.push_back(std::move(entry));
    if (o.pass) {
      ++summary.pass_count;
    } else {
      ++summary.fail_count;
    }
    const double d = std::isfinite(o.discrepancy) ? o.discrepancy : INFINITY;
    if (worst_id.empty() || d > worst) {
      worst = d;
      worst_id = c.id;
    }
  }
  summary.report = {{"schema", 1},
                    {"suite", options.suite},
                    {"seed", options.seed},
                    {"tolerance_override", options.tolerance ? json(*options.tolerance) : json(nullptr)},
                    {"case_count", cases.size()},
                    {"pass_count", summary.pass_count},
                    {"fail_count", summary.fail_count},
                    {"worst_discrepancy", real_or_null(worst)},
                    {"worst_case", worst_id},
                    {"cases", std::move(list)}};
  if (options.with_timing) summary.report["wall_time_s"] = wall;
  return summary;
}

}  // namespace specfun::cli
