#include "specfun/trig_derivs.hpp"

#include <cmath>

#include "specfun/continuation.hpp"
#include "specfun/elementary.hpp"

namespace specfun {
namespace {

// e^{i theta} with theta = a x (cot/csc) or a x + b (tan/sec).
Complex angle(const TrigKind& t, Complex x) {
  const bool cot_ring = t.kind == TrigFunction::cot || t.kind == TrigFunction::csc;
  return cot_ring ? t.frequency * x : t.frequency * x + t.phase;
}

}  // namespace

EvalResult trig_deriv(const TrigKind& t, int k, Complex x, const QuadratureSpec& spec) {
  if (k < 0) {
    throw Error(ErrorKind::domain, "trig_deriv: requires k >= 0");
  }
  if (t.frequency == Complex(0.0, 0.0)) {
    throw Error(ErrorKind::domain, "trig_deriv: frequency must be nonzero");
  }
  const Complex theta = angle(t, x);
  const bool cot_ring = t.kind == TrigFunction::cot || t.kind == TrigFunction::csc;
  // Li/Phi argument e^m: e^{2 i theta} for cot/csc, -e^{2 i theta} for tan/sec.
  Complex m = 2.0 * imag_unit * theta;
  if (!cot_ring) m += imag_unit * pi;
  m = reduce_strip(m);
  if (std::abs(cexpm1(m)) < 1e-14) {
    throw Error(ErrorKind::pole, "trig_deriv: argument is at a pole");
  }
  const Complex scale = ipow(2.0 * imag_unit * t.frequency, k);
  const Complex half_turn = std::exp(imag_unit * theta);
  EvalResult result;
  switch (t.kind) {
    case TrigFunction::cot:
      if (k == 0) result.value = -imag_unit;
      accumulate(result, polylog_neg(k, m, spec), -2.0 * imag_unit * scale);
      break;
    case TrigFunction::tan:
      if (k == 0) result.value = imag_unit;
      accumulate(result, polylog_neg(k, m, spec), 2.0 * imag_unit * scale);
      break;
    case TrigFunction::csc:
      accumulate(result, lerch_phi_neg(k, m, 0.5, spec), -2.0 * imag_unit * scale * half_turn);
      break;
    case TrigFunction::sec:
      accumulate(result, lerch_phi_neg(k, m, 0.5, spec), 2.0 * scale * half_turn);
      break;
  }
  return result;
}

std::pair<Complex, Complex> even_zeta_gf(Complex x, int terms, const QuadratureSpec& spec) {
  if (!(std::abs(x) < 1.0)) {
    throw Error(ErrorKind::domain, "even_zeta_gf: series diverges for |x| >= 1");
  }
  if (terms < 1) {
    throw Error(ErrorKind::domain, "even_zeta_gf: requires terms >= 1");
  }
  const Complex x2 = x * x;
  Complex series = -0.5;
  Complex power = 1.0;
  for (int j = 1; j <= terms; ++j) {
    power *= x2;
    series += zeta(2.0 * j, spec).value * power;
  }
  Complex closed = -0.5;
  if (x != Complex(0.0, 0.0)) {
    const Complex w = pi * x;
    closed = -0.5 * w * std::cos(w) / std::sin(w);
  }
  return {series, closed};
}

EvalResult neg_zeta_gf(Complex x) {
  EvalResult result;
  result.domain_warning = !(std::abs(x) < two_pi);
  if (std::abs(x) < 1e-3) {
    // Laurent expansion; the closed form loses digits to cancellation here.
    const Complex x2 = x * x;
    result.value = -0.5 - x * (1.0 / 12.0 - x2 * (1.0 / 720.0 - x2 * (1.0 / 30240.0 - x2 / 1209600.0)));
    return result;
  }
  const double turns = std::nearbyint(x.imag() / two_pi);
  if (turns != 0.0 && std::abs(x - Complex(0.0, two_pi * turns)) <= 1e-12 * std::abs(x)) {
    throw Error(ErrorKind::pole, "neg_zeta_gf: pole of coth(x/2)");
  }
  result.value = -0.5 + 1.0 / x - 0.5 / std::tanh(0.5 * x);
  if (!std::isfinite(result.value.real()) || !std::isfinite(result.value.imag())) {
    throw Error(ErrorKind::pole, "neg_zeta_gf: pole of coth(x/2)");
  }
  return result;
}

}  // namespace specfun
