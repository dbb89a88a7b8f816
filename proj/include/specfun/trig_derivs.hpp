#pragma once

#include <utility>

#include "specfun/types.hpp"

namespace specfun {

enum class TrigFunction { cot, csc, tan, sec };

/// Which trigonometric function is differentiated: f(a x) for cot/csc and
/// f(a x + b) for tan/sec. `frequency` must be nonzero.
struct TrigKind {
  TrigFunction kind = TrigFunction::cot;
  Complex frequency{1.0, 0.0};
  Complex phase{0.0, 0.0};
};

/// k-th x-derivative via the polylogarithm / Lerch closed forms:
///   cot: -i d0k - 2i (2ia)^k Li_{-k}(e^{2iax})
///   csc: -2i (2ia)^k e^{iax} Phi(e^{2iax}, -k, 1/2)
///   tan:  i d0k + 2i (2ia)^k Li_{-k}(-e^{2i(ax+b)})
///   sec:  2 (2ia)^k e^{i(ax+b)} Phi(-e^{2i(ax+b)}, -k, 1/2)
/// A pole of the function raises ErrorKind::pole.
EvalResult trig_deriv(const TrigKind& t, int k, Complex x, const QuadratureSpec& spec = {});

/// (partial sum of zeta(2k) x^{2k} for k = 0..terms, -pi x cot(pi x) / 2).
/// Requires |x| < 1 and terms >= 1.
std::pair<Complex, Complex> even_zeta_gf(Complex x, int terms, const QuadratureSpec& spec = {});

/// -1/2 + 1/x - coth(x/2)/2, the exponential generating function of
/// zeta(-j), with its x = 0 limit -1/2. |x| >= 2 pi sets domain_warning;
/// the poles x = 2 pi i j, j != 0, raise ErrorKind::pole.
EvalResult neg_zeta_gf(Complex x);

}  // namespace specfun
