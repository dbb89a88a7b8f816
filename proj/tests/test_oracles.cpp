#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "specfun/continuation.hpp"
#include "specfun/elementary.hpp"
#include "specfun/oracles.hpp"
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

}  // namespace

TEST_CASE("exact Bernoulli numbers") {
  CHECK(bernoulli_exact(0) == RationalValue(1));
  CHECK(bernoulli_exact(2) == RationalValue(1, 6));
  CHECK(bernoulli_exact(12) == RationalValue(-691, 2730));
  CHECK(bernoulli_exact(20) == RationalValue(-174611, 330));
  CHECK(numerator(bernoulli_exact(60)) != 0);
  CHECK(kind_of([] { bernoulli_exact(3); }) == ErrorKind::domain);
  CHECK(kind_of([] { bernoulli_exact(62); }) == ErrorKind::domain);
  CHECK(kind_of([] { bernoulli_exact(-2); }) == ErrorKind::domain);
}

TEST_CASE("exact Bernoulli vs the zeta relation") {
  for (int j = 0; j <= 20; j += 2) {
    const double exact = static_cast<double>(bernoulli_exact(j));
    CHECK(std::abs(bernoulli(j) - exact) <= 1e-9 * std::abs(exact));
  }
}

TEST_CASE("brute partial sums") {
  CHECK(brute_partial_sum(2.0, 0.0, 0.0, 3, 1) == Complex(14.0));
  CHECK(std::abs(brute_partial_sum(0.0, std::log(0.5), 0.0, 3, 1) - 0.875) < 1e-15);
  const Complex k(1.0, 1.0);
  Complex direct = 0.0;
  for (int q = 0; q <= 4; ++q) direct += std::pow(q + 1.5, k) * std::exp(-0.2 * q);
  CHECK(rel_err(brute_partial_sum(k, -0.2, 1.5, 4, 0), direct) < 1e-14);
  // k > 0 allows a zero base
  CHECK(brute_partial_sum(2.0, 0.0, 0.0, 2, 0) == Complex(5.0));
  CHECK(kind_of([] { brute_partial_sum(-1.0, 0.0, 0.0, 3, 0); }) == ErrorKind::singularity);
  CHECK(kind_of([] { brute_partial_sum(0.0, 0.0, 0.0, 3, 0); }) == ErrorKind::singularity);
  CHECK(kind_of([] { brute_partial_sum(1.0, 0.0, 1.0, 2, 3); }) == ErrorKind::domain);
}

TEST_CASE("compensated summation") {
  // 1 + many tiny terms that plain accumulation would drop
  const Complex sum = brute_partial_sum(-2.0, 0.0, 0.0, 100000, 1);
  CHECK(std::abs(sum.real() - (pi * pi / 6 - 1.0 / 100000 + 0.5 / (1e10) - 1.0 / (6e15))) < 2e-16 * 10);
}

TEST_CASE("Dirichlet series zeta") {
  CHECK(std::abs(dirichlet_series_zeta(2.0, 10000) - pi * pi / 6) < 1e-9);
  CHECK(std::abs(dirichlet_series_zeta(4.0, 1000) - std::pow(pi, 4) / 90) < 1e-11);
  const Complex k(2.0, 3.0);
  CHECK(std::abs(dirichlet_series_zeta(k, 10000) - dirichlet_series_zeta(k, 20000)) < 1e-8);
  CHECK(kind_of([] { dirichlet_series_zeta(1.1, 1000); }) == ErrorKind::domain);
  CHECK(kind_of([] { dirichlet_series_zeta(2.0, 5); }) == ErrorKind::domain);
}

TEST_CASE("literature integral") {
  CHECK(std::abs(literature_integral_zeta(2.0).value - pi * pi / 6) < 1e-10);
  CHECK(std::abs(literature_integral_zeta(4.0).value - std::pow(pi, 4) / 90) < 1e-10);
  CHECK(std::abs(literature_integral_zeta(3.0).value.real() - 1.2020569032) < 1e-10);
  Rng rng(51);
  for (int i = 0; i < 25; ++i) {
    const Complex k = rng.box(1.5, 8.0, -5.0, 5.0);
    CAPTURE(k);
    CHECK(rel_err(literature_integral_zeta(k).value, dirichlet_series_zeta(k, 20000)) < 1e-9);
  }
  CHECK(kind_of([] { literature_integral_zeta(1.0); }) == ErrorKind::domain);
}

TEST_CASE("Lerch closed form on the unit circle") {
  CHECK(std::abs(lerch_closed_form_neg_int(0.5, 0, 0) - 0.5) < 1e-15);
  // Abel sum of (-1)^q (q+1)
  CHECK(std::abs(lerch_closed_form_neg_int(0.5, 1, 0) - 0.25) < 1e-15);
  // sum (q+1)^2 z^q = (1+z)/(1-z)^3
  const Complex z = std::polar(1.0, two_pi / 3);
  CHECK(std::abs(lerch_closed_form_neg_int(1.0 / 3, 2, 0) - (1.0 + z) / std::pow(1.0 - z, 3)) < 1e-14);
  CHECK(kind_of([] { lerch_closed_form_neg_int(1.0, 2, 0); }) == ErrorKind::singularity);
  CHECK(kind_of([] { lerch_closed_form_neg_int(0.5, -1, 0); }) == ErrorKind::domain);
}

TEST_CASE("binomial recombination examples") {
  const auto [hl, hr] = binomial_recombination(Recombination::hurwitz, 0, 1.0, 1.0, 0.0);
  CHECK(std::abs(hl + 1.5) < 1e-12);
  CHECK(std::abs(hr + 1.5) < 1e-12);
  const double m = -std::log(2.0);
  const auto [pl, pr] = binomial_recombination(Recombination::polylog, 1, 1.0, 1.0, m);
  const Complex brute = std::exp(m) * brute_partial_sum(1.0, m, 2.0, 200, 0);
  CHECK(rel_err(pl, brute) < 1e-10);
  CHECK(rel_err(pr, brute) < 1e-10);
  const Complex v(1.3, 0.2), mm(-0.4, 1.0);
  const auto [ll, lr] = binomial_recombination(Recombination::lerch, 2, 0.0, v, mm);
  CHECK(ll == lr);
  CHECK(kind_of([] { binomial_recombination(Recombination::lerch, -1, 1.0, 1.0, -1.0); }) == ErrorKind::domain);
}

TEST_CASE("binomial recombination on random draws") {
  Rng rng(52);
  for (auto kind : {Recombination::lerch, Recombination::polylog, Recombination::hurwitz}) {
    for (int i = 0; i < 50; ++i) {
      const int k = rng.integer(0, 6);
      const Complex u = rng.box(-1.0, 3.0, -1.0, 1.0);
      const Complex v = rng.box(0.3, 3.0, -1.0, 1.0);
      Complex m = rng.box(-2.0, 0.3, -3.0, 3.0);
      if (std::abs(m) < 0.2) m += 0.5;
      if ((u + v).real() <= 0.1 || (u + 1.0).real() <= 0.1) continue;
      const auto [left, right] = binomial_recombination(kind, k, u, v, m);
      CAPTURE(static_cast<int>(kind));
      CAPTURE(k);
      CHECK(rel_err(left, right, 1.0) < 1e-8);
    }
  }
}

TEST_CASE("symbolic differentiation ring") {
  const double x = 0.7;
  const TrigKind cot{TrigFunction::cot, 1.0, 0.0}, csc{TrigFunction::csc, 1.0, 0.0};
  const TrigKind tan{TrigFunction::tan, 1.0, 0.3}, sec{TrigFunction::sec, 2.0, 0.0};
  CHECK(std::abs(symbolic_trig_derivative(cot, 1, x) + 1.0 / std::pow(std::sin(x), 2)) < 1e-14);
  CHECK(std::abs(symbolic_trig_derivative(csc, 1, x) + std::cos(x) / std::pow(std::sin(x), 2)) < 1e-14);
  CHECK(std::abs(symbolic_trig_derivative(tan, 1, x) - 1.0 / std::pow(std::cos(x + 0.3), 2)) < 1e-13);
  CHECK(std::abs(symbolic_trig_derivative(sec, 1, x) - 2.0 * std::tan(2 * x) / std::cos(2 * x)) < 1e-13);
  // cot'' = 2 csc^2 cot
  CHECK(std::abs(symbolic_trig_derivative(cot, 2, x) - 2.0 / std::pow(std::sin(x), 2) / std::tan(x)) < 1e-13);
  CHECK(kind_of([&] { symbolic_trig_derivative(cot, -1, x); }) == ErrorKind::domain);
}
