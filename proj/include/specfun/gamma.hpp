#pragma once

#include "specfun/types.hpp"

namespace specfun {

/// Complete gamma function for complex argument (Lanczos g = 7 with
/// reflection for Re(a) < 1/2). Nonpositive integers raise ErrorKind::pole.
Complex gamma_complete(Complex a);

/// Principal upper incomplete gamma Gamma(a, z).
///
/// Uses the lower-gamma power series for |z| <= |a| + 4 and the Legendre
/// continued fraction otherwise, except that Re(a) < 1/2 with |z| >= 1.5
/// also takes the fraction when it converges. Near the negative real axis
/// the series is summed in its entire form sum (-z)^n / (n! (a+n)). Nonpositive integer orders go
/// through E1(z) inside the series region. Gamma(a, 0) with Re(a) <= 0 raises ErrorKind::range.
Complex gamma_upper(Complex a, Complex z);

/// w^(-a) * exp(w c) * Gamma(a, w c) with a single branch of log(w) shared by
/// the power and by the (w c)^a factor hidden inside Gamma. This is the
/// (-m)^(-k-1) e^(-m b) Gamma(k+1, -m b) product of the Lerch and
/// polylogarithm formulas with w = -m.
///
/// The branch of log(w c) is taken as Log(w) + Log(c); when that leaves the
/// principal strip, Gamma is continued onto the matching sheet rather than
/// silently mixing branches. Requires w != 0 and c != 0.
Complex paired_gamma_term(Complex a, Complex w, Complex c);

}  // namespace specfun
