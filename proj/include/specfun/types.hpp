#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace specfun {

using Complex = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;
inline constexpr Complex imag_unit{0.0, 1.0};

enum class ErrorKind {
  domain,         // parameter outside the admissible region
  pole,           // evaluation at a pole of the function
  singularity,    // removable-looking but genuinely singular input (e^m = 1, 0^-k)
  range,          // result not representable in binary64
  nonconvergence, // an iterative scheme ran out of terms
  evaluation      // NaN or infinity produced by an integrand
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Controls for the adaptive quadrature behind every integral formula.
///
/// `x_max` is the truncation point of the semi-infinite integrals measured in
/// the natural variable of the (1 - coth(pi x)) kernel; tan-substituted
/// integrands rescale it by 1/Re(n).
struct QuadratureSpec {
  double rel_tol = 1e-12;
  double abs_tol = 1e-14;
  int max_depth = 40;
  double x_max = 30.0;

  /// Spec with the given tolerances and x_max = max(30, point where the kernel
  /// magnitude drops below abs_tol).
  static QuadratureSpec with_tolerance(double rel_tol, double abs_tol);

  /// Throws ErrorKind::domain unless every field satisfies its invariant.
  void validate() const;
};

struct EvalResult {
  Complex value{0.0, 0.0};
  double err_est = 0.0;
  bool converged = true;
  bool domain_warning = false;
};

/// Accumulates a value term that carries a quadrature error estimate.
inline void accumulate(EvalResult& into, const EvalResult& term, Complex factor = 1.0) {
  into.value += factor * term.value;
  into.err_est += std::abs(factor) * term.err_est;
  into.converged = into.converged && term.converged;
  into.domain_warning = into.domain_warning || term.domain_warning;
}

inline bool is_nonpositive_integer(Complex a) {
  return a.imag() == 0.0 && a.real() <= 0.0 && std::nearbyint(a.real()) == a.real();
}

inline bool is_integer(Complex a) {
  return a.imag() == 0.0 && std::nearbyint(a.real()) == a.real();
}

}  // namespace specfun
