#include "specfun/gamma.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "specfun/elementary.hpp"

namespace specfun {
namespace {

constexpr double euler_gamma = 0.57721566490153286060651209008240243;
constexpr double eps = std::numeric_limits<double>::epsilon();
constexpr double tiny = 1e-300;
constexpr int series_cap = 400;
constexpr int fraction_cap = 1000;

constexpr double lanczos_g = 7.0;
constexpr std::array<double, 9> lanczos_coeff = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

Complex log_gamma_right(Complex a) {
  // Valid for Re(a) >= 1/2.
  const Complex z = a - 1.0;
  Complex sum = lanczos_coeff[0];
  for (std::size_t i = 1; i < lanczos_coeff.size(); ++i) {
    sum += lanczos_coeff[i] / (z + static_cast<double>(i));
  }
  const Complex t = z + lanczos_g + 0.5;
  return 0.5 * std::log(two_pi) + (z + 0.5) * std::log(t) - t + std::log(sum);
}

void check_finite(Complex v, const char* what) {
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
    throw Error(ErrorKind::range, std::string(what) + ": result not representable");
  }
}

// Legendre continued fraction h with Gamma(a, z) = exp(-z) z^a h (principal).
bool continued_fraction(Complex a, Complex z, Complex& h) {
  Complex b = z + 1.0 - a;
  Complex c = 1.0 / tiny;
  Complex d = 1.0 / b;
  h = d;
  for (int i = 1; i <= fraction_cap; ++i) {
    const Complex an = -static_cast<double>(i) * (static_cast<double>(i) - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const Complex del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < eps) return true;
  }
  return false;
}

// sum_{n>=0} z^n / (a (a+1) ... (a+n)), a not a nonpositive integer.
Complex lower_series(Complex a, Complex z) {
  Complex term = 1.0 / a;
  Complex sum = term;
  for (int n = 1; n <= series_cap; ++n) {
    term *= z / (a + static_cast<double>(n));
    sum += term;
    if (std::abs(term) < eps * std::abs(sum) && static_cast<double>(n) > std::abs(z)) {
      return sum;
    }
  }
  throw Error(ErrorKind::nonconvergence, "gamma_upper: power series did not converge");
}

// sum_{n>=0} (-z)^n / (n! (a+n)) = z^-a gamma(a, z), entire in z. Its terms
// do not alternate on the negative real axis, unlike lower_series.
Complex entire_lower_series(Complex a, Complex z) {
  Complex power = 1.0;
  Complex sum = 1.0 / a;
  for (int n = 1; n <= series_cap; ++n) {
    power *= -z / static_cast<double>(n);
    const Complex add = power / (a + static_cast<double>(n));
    sum += add;
    if (std::abs(add) < eps * std::abs(sum) && static_cast<double>(n) > std::abs(z)) {
      return sum;
    }
  }
  throw Error(ErrorKind::nonconvergence, "gamma_upper: power series did not converge");
}

// E1 on the sheet selected by log_z: -gamma - log z - sum (-z)^n / (n n!).
Complex exp_integral_series(Complex z, Complex log_z) {
  Complex term = 1.0;
  Complex sum = 0.0;
  for (int n = 1; n <= series_cap; ++n) {
    term *= -z / static_cast<double>(n);
    const Complex add = term / static_cast<double>(n);
    sum += add;
    if (std::abs(add) < eps * std::abs(sum) && static_cast<double>(n) > std::abs(z)) {
      return -euler_gamma - log_z - sum;
    }
  }
  throw Error(ErrorKind::nonconvergence, "gamma_upper: E1 series did not converge");
}

// exp(z) * exp(-a log_z) * Gamma(a, z) on the sheet selected by log_z.
Complex upper_gamma_core(Complex a, Complex z, Complex log_z) {
  const Complex principal_log = clog(z);
  const double sheet = std::nearbyint((log_z - principal_log).imag() / two_pi);
  // Besides the usual |z| > |a| + 4 region, the fraction is preferred for
  // Re(a) < 1/2 once |z| >= 1.5: there Gamma(a) - gamma(a, z) cancels badly.
  // Close to the negative axis the entire series loses only exp(|z| + Re z)
  // and beats the fraction, which converges slowly there.
  const bool near_negative_axis = z.real() < 0.0 && std::abs(z) + z.real() < 2.0;
  const bool use_series = std::abs(z) <= std::abs(a) + 4.0 &&
                          (near_negative_axis || !(a.real() < 0.5 && std::abs(z) >= 1.5));

  if (is_nonpositive_integer(a)) {
    const int p = static_cast<int>(-a.real());
    const double sign = (p % 2 == 0) ? 1.0 : -1.0;
    Complex fraction;
    if (!use_series && continued_fraction(a, z, fraction)) {
      // Gamma(-p, z e^{2 pi i j}) = Gamma(-p, z) - 2 pi i j (-1)^p / p!
      Complex core = fraction;
      if (sheet != 0.0) {
        core += std::exp(z) * ipow(z, p) * sign / factorial(p) * Complex(0.0, -two_pi * sheet);
      }
      return core;
    }
    // Gamma(-p, z) = (-1)^p / p! [E1(z) - e^{-z} sum_{j<p} (-1)^j j! / z^{j+1}]
    const Complex e1 = exp_integral_series(z, log_z);
    Complex tail = 0.0;
    for (int j = 0; j < p; ++j) {
      tail += (j % 2 == 0 ? 1.0 : -1.0) * factorial(j) * ipow(z, p - j - 1);
    }
    return sign / factorial(p) * (std::exp(z) * ipow(z, p) * e1 - tail);
  }

  if (!use_series) {
    Complex fraction;
    if (continued_fraction(a, z, fraction)) {
      if (sheet == 0.0 || is_integer(a)) {
        return fraction;
      }
      // Gamma(a, z e^{2 pi i j}) = e^{2 pi i j a} Gamma(a, z) + (1 - e^{2 pi i j a}) Gamma(a)
      const Complex rot = std::exp(Complex(0.0, two_pi * sheet) * a);
      return fraction + std::exp(z - a * log_z) * (1.0 - rot) * gamma_complete(a);
    }
    // Falls through to the series near the negative real axis, where the
    // fraction stalls.
    if (std::abs(z) > 60.0) {
      throw Error(ErrorKind::nonconvergence, "gamma_upper: continued fraction did not converge");
    }
  }
  if (z.real() < 0.0) {
    return std::exp(z - a * log_z) * gamma_complete(a) - std::exp(z) * entire_lower_series(a, z);
  }
  return std::exp(z - a * log_z) * gamma_complete(a) - lower_series(a, z);
}

}  // namespace

Complex gamma_complete(Complex a) {
  if (is_nonpositive_integer(a)) {
    throw Error(ErrorKind::pole, "gamma_complete: pole at nonpositive integer");
  }
  if (a.real() < 0.5) {
    const Complex s = std::sin(pi * a);
    const Complex value = pi / (s * std::exp(log_gamma_right(1.0 - a)));
    check_finite(value, "gamma_complete");
    return value;
  }
  if (is_integer(a) && a.real() <= 23.0) {
    return factorial(static_cast<int>(a.real()) - 1);
  }
  const Complex value = std::exp(log_gamma_right(a));
  check_finite(value, "gamma_complete");
  return value;
}

Complex gamma_upper(Complex a, Complex z) {
  if (z == Complex(0.0, 0.0)) {
    if (a.real() > 0.0) return gamma_complete(a);
    throw Error(ErrorKind::range, "gamma_upper: Gamma(a, 0) diverges for Re(a) <= 0");
  }
  const Complex log_z = clog(z);
  const Complex value = upper_gamma_core(a, z, log_z) * std::exp(a * log_z - z);
  check_finite(value, "gamma_upper");
  return value;
}

Complex paired_gamma_term(Complex a, Complex w, Complex c) {
  if (w == Complex(0.0, 0.0) || c == Complex(0.0, 0.0)) {
    throw Error(ErrorKind::singularity, "paired_gamma_term: w and c must be nonzero");
  }
  const Complex z = w * c;
  const Complex log_c = clog(c);
  const Complex log_z = clog(w) + log_c;
  const Complex value = std::exp(a * log_c) * upper_gamma_core(a, z, log_z);
  check_finite(value, "paired_gamma_term");
  return value;
}

}  // namespace specfun
