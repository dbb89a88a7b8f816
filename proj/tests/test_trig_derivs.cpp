#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <functional>

#include "specfun/elementary.hpp"
#include "specfun/oracles.hpp"
#include "specfun/trig_derivs.hpp"
#include "support.hpp"

using namespace specfun;
using testing::rel_err;
using testing::Rng;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::evaluation;
}

constexpr TrigFunction all_kinds[] = {TrigFunction::cot, TrigFunction::csc, TrigFunction::tan, TrigFunction::sec};

TrigKind make(TrigFunction f, Complex a = 1.0, Complex b = 0.0) { return {f, a, b}; }

Complex plain(const TrigKind& t, Complex x) {
  switch (t.kind) {
    case TrigFunction::cot:
      return 1.0 / std::tan(t.frequency * x);
    case TrigFunction::csc:
      return 1.0 / std::sin(t.frequency * x);
    case TrigFunction::tan:
      return std::tan(t.frequency * x + t.phase);
    case TrigFunction::sec:
      return 1.0 / std::cos(t.frequency * x + t.phase);
  }
  return 0.0;
}

// Distance of the argument from the nearest pole of the selected function.
double pole_distance(const TrigKind& t, double x) {
  const bool cot_ring = t.kind == TrigFunction::cot || t.kind == TrigFunction::csc;
  const double theta = (t.frequency * x + (cot_ring ? 0.0 : t.phase)).real() + (cot_ring ? 0.0 : pi / 2);
  return std::abs(theta - pi * std::round(theta / pi));
}

Complex central_difference(const std::function<Complex(double)>& f, double x, double h) {
  const Complex d1 = (f(x + h) - f(x - h)) / (2.0 * h);
  const Complex d2 = (f(x + h / 2) - f(x - h / 2)) / h;
  const Complex d3 = (f(x + h / 4) - f(x - h / 4)) / (h / 2);
  const Complex r1 = (4.0 * d2 - d1) / 3.0, r2 = (4.0 * d3 - d2) / 3.0;
  return (16.0 * r2 - r1) / 15.0;
}

}  // namespace

TEST_CASE("trig_deriv examples") {
  CHECK(std::abs(trig_deriv(make(TrigFunction::cot), 0, pi / 4).value - 1.0) < 1e-12);
  CHECK(std::abs(trig_deriv(make(TrigFunction::cot), 1, pi / 2).value + 1.0) < 1e-11);
  CHECK(std::abs(trig_deriv(make(TrigFunction::tan), 1, 0.0).value - 1.0) < 1e-11);
}

TEST_CASE("k = 0 reproduces the functions") {
  Rng rng(41);
  for (auto f : all_kinds) {
    for (int i = 0; i < 20; ++i) {
      const TrigKind t = make(f, rng.uniform(0.3, 2.5), rng.uniform(-1.0, 1.0));
      const double x = rng.uniform(-3.0, 3.0);
      if (pole_distance(t, x) < 0.1) continue;
      CHECK(rel_err(trig_deriv(t, 0, x).value, plain(t, x)) < 1e-12);
    }
  }
}

TEST_CASE("closed forms match symbolic differentiation") {
  Rng rng(42);
  for (auto f : all_kinds) {
    int count = 0;
    while (count < 20) {
      const TrigKind t = make(f, rng.uniform(0.3, 2.0), rng.uniform(-1.0, 1.0));
      const double x = rng.uniform(-3.0, 3.0);
      if (pole_distance(t, x) < 0.15) continue;
      ++count;
      for (int k = 0; k <= 4; ++k) {
        CAPTURE(static_cast<int>(f));
        CAPTURE(k);
        CAPTURE(x);
        CHECK(rel_err(trig_deriv(t, k, x).value, symbolic_trig_derivative(t, k, x), 1.0) < 1e-9);
      }
    }
  }
}

TEST_CASE("finite differences of the previous derivative") {
  Rng rng(43);
  for (auto f : all_kinds) {
    int count = 0;
    while (count < 20) {
      const TrigKind t = make(f, rng.uniform(0.3, 2.0), rng.uniform(-1.0, 1.0));
      const double x = rng.uniform(-3.0, 3.0);
      if (pole_distance(t, x) < 0.2) continue;
      ++count;
      for (int k = 1; k <= 4; ++k) {
        auto prev = [&](double s) { return trig_deriv(t, k - 1, s).value; };
        CHECK(rel_err(trig_deriv(t, k, x).value, central_difference(prev, x, 2e-3), 1.0) < 1e-6);
      }
    }
  }
}

TEST_CASE("complex frequency and argument") {
  const TrigKind t = make(TrigFunction::sec, Complex(1.2, 0.3), Complex(0.4, -0.1));
  const Complex x(0.7, 0.2);
  for (int k = 0; k <= 4; ++k) {
    CHECK(rel_err(trig_deriv(t, k, x).value, symbolic_trig_derivative(t, k, x), 1.0) < 1e-9);
  }
}

TEST_CASE("tan at (a, b) is cot at the reflected argument") {
  Rng rng(44);
  for (int i = 0; i < 20; ++i) {
    const double a = rng.uniform(0.3, 2.0), b = rng.uniform(-1.0, 1.0), x = rng.uniform(-2.0, 2.0);
    const TrigKind tan = make(TrigFunction::tan, a, b);
    if (pole_distance(tan, x) < 0.15) continue;
    // tan(a x + b) = cot(-a (x - (pi/2 - b)/a))
    const TrigKind cot = make(TrigFunction::cot, -a);
    const double y = x - (pi / 2 - b) / a;
    for (int k = 0; k <= 4; ++k) {
      CHECK(rel_err(trig_deriv(tan, k, x).value, trig_deriv(cot, k, y).value, 1.0) < 1e-10);
    }
  }
}

TEST_CASE("trig_deriv errors") {
  CHECK(kind_of([] { trig_deriv(make(TrigFunction::cot), 0, 0.0); }) == ErrorKind::pole);
  CHECK(kind_of([] { trig_deriv(make(TrigFunction::csc), 2, pi); }) == ErrorKind::pole);
  CHECK(kind_of([] { trig_deriv(make(TrigFunction::tan), 1, pi / 2); }) == ErrorKind::pole);
  CHECK(kind_of([] { trig_deriv(make(TrigFunction::sec, 2.0, 0.5), 0, (pi / 2 - 0.5) / 2); }) == ErrorKind::pole);
  CHECK(kind_of([] { trig_deriv(make(TrigFunction::cot, 0.0), 1, 1.0); }) == ErrorKind::domain);
  CHECK(kind_of([] { trig_deriv(make(TrigFunction::cot), -1, 1.0); }) == ErrorKind::domain);
}

TEST_CASE("even zeta generating function") {
  auto [s0, c0] = even_zeta_gf(0.0, 60);
  CHECK(s0 == Complex(-0.5));
  CHECK(c0 == Complex(-0.5));
  auto [s1, c1] = even_zeta_gf(0.5, 60);
  CHECK(std::abs(c1) < 1e-15);
  CHECK(std::abs(s1 - c1) < 1e-10);
  // partial sums approach 0 at x = 1/2
  CHECK(std::abs(even_zeta_gf(0.5, 20).first) > std::abs(s1));
  auto [s2, c2] = even_zeta_gf(0.25, 60);
  CHECK(std::abs(s2 - c2) < 1e-10);
  auto [s3, c3] = even_zeta_gf(Complex(0.2, 0.3), 60);
  CHECK(std::abs(s3 - c3) < 1e-10);
  CHECK(kind_of([] { even_zeta_gf(1.0, 60); }) == ErrorKind::domain);
  CHECK(kind_of([] { even_zeta_gf(Complex(0.0, 1.5), 60); }) == ErrorKind::domain);
  CHECK(kind_of([] { even_zeta_gf(0.2, 0); }) == ErrorKind::domain);
}

TEST_CASE("negative-integer zeta generating function") {
  CHECK(neg_zeta_gf(0.0).value == Complex(-0.5));
  // first Taylor coefficient by a contour average
  Complex d = 0.0;
  const int points = 64;
  const double r = 0.5;
  for (int i = 0; i < points; ++i) {
    const Complex w = std::polar(1.0, two_pi * i / points);
    d += neg_zeta_gf(r * w).value / w;
  }
  d /= points * r;
  CHECK(std::abs(d + 1.0 / 12) < 1e-12);
  // x = 1 against the Bernoulli series sum_j zeta(-j) x^j / j!
  Complex series = -0.5;
  for (int j = 1; j <= 59; j += 2) {
    series -= static_cast<double>(bernoulli_exact(j + 1)) / factorial(j + 1);
  }
  CHECK(std::abs(neg_zeta_gf(1.0).value - series) < 1e-14);
  // the small-x expansion and the closed form join smoothly
  for (double x : {9.99e-4, 1.001e-3}) {
    const Complex closed = -0.5 + 1.0 / x - 0.5 / std::tanh(0.5 * x);
    CHECK(std::abs(neg_zeta_gf(x).value - closed) < 1e-12);
  }
  CHECK_FALSE(neg_zeta_gf(3.0).domain_warning);
  CHECK(neg_zeta_gf(7.0).domain_warning);
  CHECK(kind_of([] { neg_zeta_gf(Complex(0.0, two_pi)); }) == ErrorKind::pole);
}
