#pragma once

#include <functional>

#include "specfun/types.hpp"

namespace specfun {

using RealIntegrand = std::function<Complex(double)>;

/// 1 - coth(pi x) in the cancellation-free form -2 / (exp(2 pi x) - 1).
/// Strictly negative and increasing to 0 on x > 0; x <= 0 raises
/// ErrorKind::domain.
double kernel_value(double x);

/// 1 - coth(w) = -2 / (exp(2 w) - 1) for complex w with Re(w) > 0.
Complex coth_kernel(Complex w);

/// csch(w)^2 = 4 exp(-2w) / (exp(-2w) - 1)^2 for complex w with Re(w) > 0.
Complex csch2_kernel(Complex w);

/// Integral of h over [0, infinity), where h already contains the kernel
/// factor (1 - coth(pi x)) and is finite at x = 0. The rule never samples
/// x = 0 itself; callers still pass h with its limit there.
///
/// Adaptive Gauss-Kronrod (7/15) on [0, x_max]; err_est is the summed
/// |K15 - G7| plus an estimate of the truncated tail.
EvalResult integrate_exp_kernel(const RealIntegrand& h, const QuadratureSpec& spec);

/// Integral over v in [0, pi/2) of (1 - coth(pi n tan v)) g(tan v) sec^2(v),
/// evaluated as the integral over t in [0, infinity) of
/// (1 - coth(pi n t)) g(t). Re(n) <= 0 raises ErrorKind::domain.
EvalResult integrate_tan_kernel(const RealIntegrand& g, Complex n, const QuadratureSpec& spec);

/// Integral over t in [0, infinity) of csch^2(pi n t) g(t); g must vanish
/// like t^2 at the origin. Re(n) <= 0 raises ErrorKind::domain.
EvalResult integrate_csch2_kernel(const RealIntegrand& g, Complex n, const QuadratureSpec& spec);

/// Plain adaptive Gauss-Kronrod over the finite interval [a, b].
EvalResult integrate_interval(const RealIntegrand& f, double a, double b, const QuadratureSpec& spec);

}  // namespace specfun
