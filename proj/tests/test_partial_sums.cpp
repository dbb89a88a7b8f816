#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "specfun/continuation.hpp"
#include "specfun/elementary.hpp"
#include "specfun/oracles.hpp"
#include "specfun/partial_sums.hpp"
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

// Taylor coefficients at 0 of a function analytic on |n| <= r, by the
// trapezoid rule on the circle.
std::vector<Complex> taylor_coefficients(auto&& f, int count, double r = 0.5, int points = 64) {
  std::vector<Complex> samples(points);
  for (int i = 0; i < points; ++i) samples[i] = f(std::polar(r, two_pi * i / points));
  std::vector<Complex> c(count);
  for (int j = 0; j < count; ++j) {
    Complex sum = 0.0;
    for (int i = 0; i < points; ++i) sum += samples[i] * std::polar(1.0, -two_pi * i * j / points);
    c[j] = sum / (points * std::pow(r, j));
  }
  return c;
}

// key_sum in exact-coefficient form: -1/2 sum_j B_{2j} n^{-2j} / ((2j)! (2k-2j)!)
Complex key_sum_reference(int k, Complex n) {
  Complex sum = 0.0;
  for (int j = 0; j <= k; ++j) {
    const double b = static_cast<double>(bernoulli_exact(2 * j));
    sum += b * ipow(n, -2 * j) / (factorial(2 * j) * factorial(2 * k - 2 * j));
  }
  return -0.5 * sum;
}

void check_terms(const PartialSumResult& r) {
  CHECK(r.value == r.terms.leading + r.terms.transcendent + r.terms.gamma + r.terms.integral);
  CHECK(r.err_est >= 0.0);
}

}  // namespace

TEST_CASE("harmonic_sum examples") {
  CHECK(std::abs(harmonic_sum(2.0, 3.0).value - 14.0) < 1e-11);
  CHECK(std::abs(harmonic_sum(3.0, 10.0).value - 3025.0) < 1e-9);
  CHECK(std::abs(harmonic_sum(0.5, 2.0).value - (1.0 + std::sqrt(2.0))) < 1e-11);
  CHECK(std::abs(harmonic_sum(0.5, 2.0).value.real() - 2.4142135624) < 1e-10);
  check_terms(harmonic_sum(Complex(1.5, 0.5), Complex(2.3, -0.4)));
  CHECK(kind_of([] { harmonic_sum(-1.0, 3.0); }) == ErrorKind::pole);
  CHECK(kind_of([] { harmonic_sum(2.0, -1.0); }) == ErrorKind::domain);
  CHECK(kind_of([] { harmonic_sum(2.0, Complex(-1.5, 2.0)); }) == ErrorKind::domain);
}

TEST_CASE("harmonic_sum at n = 0 is the empty sum") {
  for (const Complex k : {Complex(2.0), Complex(0.5, 1.0), Complex(-2.5)}) {
    CHECK(std::abs(harmonic_sum(k, 0.0).value) < 1e-12);
  }
}

TEST_CASE("faulhaber examples") {
  CHECK(std::abs(faulhaber_odd(1, 4.0) - 10.0) < 1e-13);
  CHECK(std::abs(faulhaber_odd(2, 3.0) - 36.0) < 1e-13);
  CHECK(std::abs(faulhaber_odd(3, 2.0) - 33.0) < 1e-13);
  CHECK(kind_of([] { faulhaber_odd(0, 2.0); }) == ErrorKind::domain);
}

TEST_CASE("integer agreement with brute sums and Faulhaber") {
  for (int k = 0; k <= 8; ++k) {
    for (int n = 1; n <= 20; ++n) {
      const Complex brute = brute_partial_sum(k, 0.0, 0.0, n, 1);
      const Complex value = harmonic_sum(k, n).value;
      CAPTURE(k);
      CAPTURE(n);
      CHECK(rel_err(value, brute) < 1e-9);
      if (k % 2 == 1) {
        const Complex exact = faulhaber_odd((k + 1) / 2, n);
        CHECK(rel_err(exact, brute) < 1e-15);
        CHECK(rel_err(value, exact) < 1e-9);
      }
    }
  }
}

TEST_CASE("Faulhaber coefficients are the Taylor coefficients of harmonic_sum") {
  for (int p = 1; p <= 4; ++p) {
    const int k = 2 * p - 1;
    const int count = 2 * p + 2;
    const auto poly = taylor_coefficients([p](Complex n) { return faulhaber_odd(p, n); }, count);
    const auto cont = taylor_coefficients([k](Complex n) { return harmonic_sum(k, n).value; }, count);
    CHECK(std::abs(poly[2 * p] - 1.0 / (2.0 * p)) < 1e-12);
    CHECK(std::abs(poly[2 * p - 1] - 0.5) < 1e-12);
    for (int j = 0; j < count; ++j) {
      CAPTURE(p);
      CAPTURE(j);
      CHECK(std::abs(poly[j] - cont[j]) < 1e-6);
    }
  }
}

TEST_CASE("harmonic telescoping") {
  Rng rng(21);
  for (int i = 0; i < 40; ++i) {
    const Complex k = rng.box(-3.0, 5.0, -2.0, 2.0);
    const Complex n = rng.box(-0.5, 10.0, -2.0, 2.0);
    if (std::abs(k + 1.0) < 0.3 || std::abs(k - 1.0) < 0.1) continue;
    const Complex rhs = zeta(-k).value - hurwitz_zeta_neg(k, n + 1.0).value;
    CHECK(rel_err(harmonic_sum(k, n).value, rhs, 1.0) < 1e-8);
  }
}

TEST_CASE("hurwitz_partial examples and telescoping") {
  CHECK(std::abs(hurwitz_partial(2.0, 0.5, 2.0).value - 8.75) < 1e-11);
  CHECK(std::abs(hurwitz_partial(0.0, 0.7, 4.0).value - 5.0) < 1e-12);
  const Complex k(-0.5, 1.0);
  CHECK(rel_err(hurwitz_partial(k, 1.5, 3.0).value, brute_partial_sum(k, 0.0, 1.5, 3, 0)) < 1e-10);
  check_terms(hurwitz_partial(k, 1.5, 3.0));
  Rng rng(22);
  for (int i = 0; i < 40; ++i) {
    const Complex kk = rng.box(-3.0, 4.0, -2.0, 2.0);
    const Complex b = rng.box(0.2, 3.0, -1.0, 1.0);
    const Complex n = rng.box(0.0, 8.0, -2.0, 2.0);
    if (std::abs(kk + 1.0) < 0.3) continue;
    const Complex rhs = hurwitz_zeta_neg(kk, b).value - hurwitz_zeta_neg(kk, n + 1.0 + b).value;
    CHECK(rel_err(hurwitz_partial(kk, b, n).value, rhs, 1.0) < 1e-8);
  }
  CHECK(kind_of([] { hurwitz_partial(-1.0, 1.0, 2.0); }) == ErrorKind::pole);
  CHECK(kind_of([] { hurwitz_partial(1.0, -1.0, 2.0); }) == ErrorKind::domain);
}

TEST_CASE("polylog_partial examples") {
  const double m = -std::log(2.0);
  CHECK(std::abs(polylog_partial(1.0, m, 2.0).value - 1.0) < 1e-11);
  // 1/2 + 1/4 + 1/8
  CHECK(std::abs(polylog_partial(0.0, m, 3.0).value - 0.875) < 1e-11);
  const Complex k(2.0, 1.0);
  CHECK(rel_err(polylog_partial(k, -0.3, 5.0).value, brute_partial_sum(k, -0.3, 0.0, 5, 1)) < 1e-10);
  check_terms(polylog_partial(k, -0.3, 5.0));
  CHECK(kind_of([] { polylog_partial(1.0, 0.0, 2.0); }) == ErrorKind::singularity);
  CHECK(kind_of([] { polylog_partial(1.0, Complex(0.0, two_pi), 2.0); }) == ErrorKind::singularity);
  CHECK(kind_of([] { polylog_partial(1.0, Complex(0.1, 7.0), 2.5); }) == ErrorKind::domain);
}

TEST_CASE("integer n makes polylog_partial periodic in m") {
  const Complex k(1.5, -0.5), m(0.2, 2.0);
  const Complex base = polylog_partial(k, m, 4.0).value;
  CHECK(rel_err(polylog_partial(k, m + Complex(0.0, two_pi), 4.0).value, base) < 1e-11);
  CHECK(rel_err(polylog_partial(k, m - Complex(0.0, 3.0 * two_pi), 4.0).value, base) < 1e-11);
}

TEST_CASE("polylog telescoping") {
  Rng rng(23);
  for (int i = 0; i < 40; ++i) {
    const Complex k = rng.box(-3.0, 4.0, -2.0, 2.0);
    const Complex m = rng.box(-2.0, 0.3, -3.0, 3.0);
    const double n = rng.uniform(0.0, 8.0);
    if (std::abs(m) < 0.2) continue;
    const Complex rhs = polylog_neg(k, m).value - std::exp(m * (n + 1.0)) * lerch_phi_neg(k, m, n + 1.0).value;
    CAPTURE(k);
    CAPTURE(m);
    CAPTURE(n);
    CHECK(rel_err(polylog_partial(k, m, n).value, rhs, 1.0) < 1e-8);
  }
}

TEST_CASE("lerch_partial examples and telescoping") {
  const double m = -std::log(2.0);
  CHECK(std::abs(lerch_partial(0.0, m, 1.0, 2.0).value - 1.75) < 1e-11);
  CHECK(kind_of([] { lerch_partial(1.0, 0.0, 2.0, 3.0); }) == ErrorKind::singularity);
  const Complex k(1.0, 1.0);
  CHECK(rel_err(lerch_partial(k, -0.2, 1.25, 4.0).value, brute_partial_sum(k, -0.2, 1.25, 4, 0)) < 1e-10);
  CHECK(rel_err(lerch_partial(k, -0.2, 1.5, 4.0).value, brute_partial_sum(k, -0.2, 1.5, 4, 0)) < 1e-10);
  check_terms(lerch_partial(k, -0.2, 1.25, 4.0));
  Rng rng(24);
  for (int i = 0; i < 40; ++i) {
    const Complex kk = rng.box(-3.0, 4.0, -2.0, 2.0);
    const Complex mm = rng.box(-2.0, 0.3, -3.0, 3.0);
    const Complex b = rng.box(0.2, 3.0, -1.0, 1.0);
    const double n = rng.uniform(0.0, 8.0);
    if (std::abs(mm) < 0.2) continue;
    const Complex rhs =
        lerch_phi_neg(kk, mm, b).value - std::exp(mm * (n + 1.0)) * lerch_phi_neg(kk, mm, n + 1.0 + b).value;
    CHECK(rel_err(lerch_partial(kk, mm, b, n).value, rhs, 1.0) < 1e-8);
  }
  CHECK(kind_of([] { lerch_partial(1.0, -1.0, 0.0, 3.0); }) == ErrorKind::domain);
}

TEST_CASE("key_sum") {
  CHECK(std::abs(key_sum(1, 1.0).value + 7.0 / 24) < 1e-12);
  // zeta(0) / (2k)! dominates for large n
  CHECK(std::abs(key_sum(1, 1e4).value + 0.25) < 1e-8);
  CHECK(rel_err(key_sum(1, 1e4).value, key_sum_reference(1, 1e4)) < 1e-11);
  for (int k = 1; k <= 6; ++k) {
    for (const Complex n : {Complex(0.5), Complex(1.0), Complex(3.0), Complex(1.5, 2.0), Complex(20.0, -3.0)}) {
      CAPTURE(k);
      CAPTURE(n);
      CHECK(rel_err(key_sum(k, n).value, key_sum_reference(k, n)) < 1e-9);
    }
  }
  CHECK(rel_err(key_sum(3, Complex(2.0, -1.0)).value, std::conj(key_sum(3, Complex(2.0, 1.0)).value)) < 1e-13);
  CHECK(kind_of([] { key_sum(1, 0.0); }) == ErrorKind::domain);
  CHECK(kind_of([] { key_sum(0, 1.0); }) == ErrorKind::domain);
}

TEST_CASE("lerch_limit") {
  CHECK(std::abs(lerch_limit(1, 1.0).value + 13.0 / 12) < 1e-10);
  CHECK(std::abs(lerch_limit(2, 0.0).value - 1.0 / 120) < 1e-11);
  // The limit is zeta(1-2k, n+1).
  for (int k = 1; k <= 3; ++k) {
    for (const Complex n : {Complex(0.0), Complex(2.0), Complex(0.5, 1.0)}) {
      CHECK(rel_err(lerch_limit(k, n).value, hurwitz_zeta_neg(2.0 * k - 1.0, n + 1.0).value, 1.0) < 1e-10);
    }
  }
  CHECK(kind_of([] { lerch_limit(0, 1.0); }) == ErrorKind::domain);
  CHECK(kind_of([] { lerch_limit(1, -1.0); }) == ErrorKind::domain);
}
