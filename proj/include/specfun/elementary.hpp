#pragma once

#include "specfun/types.hpp"

namespace specfun {

/// Principal logarithm with arg in (-pi, pi]. A negative real base carrying a
/// signed-zero imaginary part is treated as lying on the upper lip of the cut.
Complex clog(Complex z);

/// log(1 + w), accurate for small |w|.
Complex clog1p(Complex w);

/// exp(w) - 1, accurate for small |w|.
Complex cexpm1(Complex w);

/// Principal-branch power exp(exponent * clog(base)).
/// base = 0 is allowed only when Re(exponent) > 0 (value 0); otherwise
/// ErrorKind::singularity.
Complex cpow(Complex base, Complex exponent);

/// Integer power by repeated squaring; ipow(z, 0) == 1 for every z.
Complex ipow(Complex z, int n);

/// Reduces m modulo 2*pi*i so that Im(m) lies in (-pi, pi].
Complex reduce_strip(Complex m);

/// n! as a double (exact up to 22!).
double factorial(int n);

/// Binomial coefficient C(n, k) as a double.
double binomial(int n, int k);

}  // namespace specfun
