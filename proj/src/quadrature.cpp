#include "specfun/quadrature.hpp"

#include <array>
#include <cmath>
#include <queue>
#include <string>
#include <vector>

#include "specfun/elementary.hpp"

namespace specfun {
namespace {

// Kronrod abscissae on [-1, 1]; odd indices are the Gauss points.
constexpr std::array<double, 8> kronrod_x = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kronrod_w = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> gauss_w = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a;
  double b;
  Complex value;
  double err;
  int depth;
};

struct PanelOrder {
  bool operator()(const Panel& lhs, const Panel& rhs) const { return lhs.err < rhs.err; }
};

Complex checked(const RealIntegrand& f, double x) {
  const Complex v = f(x);
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
    throw Error(ErrorKind::evaluation, "quadrature: integrand is not finite at x = " + std::to_string(x));
  }
  return v;
}

Panel gauss_kronrod(const RealIntegrand& f, double a, double b, int depth) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const Complex fc = checked(f, center);
  Complex kronrod = fc * kronrod_w[7];
  Complex gauss = fc * gauss_w[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kronrod_x[j];
    const Complex sum = checked(f, center - dx) + checked(f, center + dx);
    kronrod += kronrod_w[j] * sum;
    if (j % 2 == 1) gauss += gauss_w[j / 2] * sum;
  }
  kronrod *= half;
  gauss *= half;
  return {a, b, kronrod, std::abs(kronrod - gauss), depth};
}

// Globally adaptive bisection of the panel with the largest error until the
// summed error meets the tolerance. Panels at max_depth are frozen.
EvalResult adaptive(const RealIntegrand& f, const std::vector<double>& breaks, const QuadratureSpec& spec,
                    double tail_err) {
  spec.validate();
  const int max_panels = 64 * spec.max_depth;
  std::priority_queue<Panel, std::vector<Panel>, PanelOrder> open;
  Complex frozen_value = 0.0;
  double frozen_err = 0.0;
  bool converged = true;

  Complex total = 0.0;
  double total_err = 0.0;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    Panel p = gauss_kronrod(f, breaks[i], breaks[i + 1], 0);
    total += p.value;
    total_err += p.err;
    open.push(p);
  }
  int panels = static_cast<int>(open.size());

  while (!open.empty()) {
    const double target = std::max(spec.abs_tol, spec.rel_tol * std::abs(total));
    if (total_err + tail_err <= target) break;
    Panel worst = open.top();
    open.pop();
    if (worst.depth >= spec.max_depth || panels >= max_panels) {
      converged = false;
      frozen_value += worst.value;
      frozen_err += worst.err;
      if (panels >= max_panels) break;
      continue;
    }
    const double mid = 0.5 * (worst.a + worst.b);
    Panel left = gauss_kronrod(f, worst.a, mid, worst.depth + 1);
    Panel right = gauss_kronrod(f, mid, worst.b, worst.depth + 1);
    total += left.value + right.value - worst.value;
    total_err += left.err + right.err - worst.err;
    open.push(left);
    open.push(right);
    ++panels;
  }

  // Re-sum from the panels to avoid drift in the running totals.
  Complex value = frozen_value;
  double err = frozen_err;
  while (!open.empty()) {
    value += open.top().value;
    err += open.top().err;
    open.pop();
  }
  EvalResult result;
  result.value = value;
  result.err_est = err + tail_err;
  result.converged = converged && result.err_est <= std::max(spec.abs_tol, spec.rel_tol * std::abs(value));
  return result;
}

// Breakpoints scale * {0, 1/8, 1/4, ..., 2^j} capped at the truncation point.
std::vector<double> semi_infinite_breaks(double scale, double end) {
  std::vector<double> breaks{0.0};
  for (double x = 0.125 * scale; x < end; x *= 2.0) breaks.push_back(x);
  breaks.push_back(end);
  return breaks;
}

EvalResult semi_infinite(const RealIntegrand& f, double scale, const QuadratureSpec& spec) {
  spec.validate();
  const double end = spec.x_max * scale;
  // The kernel decays at least like exp(-pi x / scale) once the admissible
  // oscillatory growth is included.
  const double tail = std::abs(checked(f, end)) * scale / pi;
  return adaptive(f, semi_infinite_breaks(scale, end), spec, tail);
}

void require_right_half_plane(Complex n, const char* what) {
  if (!(n.real() > 0.0)) {
    throw Error(ErrorKind::domain, std::string(what) + ": requires Re(n) > 0");
  }
}

}  // namespace

double kernel_value(double x) {
  if (!(x > 0.0)) {
    throw Error(ErrorKind::domain, "kernel_value: requires x > 0");
  }
  return -2.0 / std::expm1(two_pi * x);
}

Complex coth_kernel(Complex w) { return -2.0 / cexpm1(2.0 * w); }

Complex csch2_kernel(Complex w) {
  const Complex e = std::exp(-2.0 * w);
  const Complex d = cexpm1(-2.0 * w);
  return 4.0 * e / (d * d);
}

EvalResult integrate_exp_kernel(const RealIntegrand& h, const QuadratureSpec& spec) {
  return semi_infinite(h, 1.0, spec);
}

EvalResult integrate_tan_kernel(const RealIntegrand& g, Complex n, const QuadratureSpec& spec) {
  require_right_half_plane(n, "integrate_tan_kernel");
  const Complex pin = pi * n;
  auto f = [&](double t) -> Complex {
    if (t == 0.0) return 0.0;
    return coth_kernel(pin * t) * g(t);
  };
  return semi_infinite(f, 1.0 / n.real(), spec);
}

EvalResult integrate_csch2_kernel(const RealIntegrand& g, Complex n, const QuadratureSpec& spec) {
  require_right_half_plane(n, "integrate_csch2_kernel");
  const Complex pin = pi * n;
  auto f = [&](double t) -> Complex {
    if (t == 0.0) return 0.0;
    return csch2_kernel(pin * t) * g(t);
  };
  return semi_infinite(f, 1.0 / n.real(), spec);
}

EvalResult integrate_interval(const RealIntegrand& f, double a, double b, const QuadratureSpec& spec) {
  if (!(b > a)) {
    throw Error(ErrorKind::domain, "integrate_interval: requires b > a");
  }
  std::vector<double> breaks;
  constexpr int pieces = 8;
  for (int i = 0; i <= pieces; ++i) breaks.push_back(a + (b - a) * i / pieces);
  return adaptive(f, breaks, spec, 0.0);
}

}  // namespace specfun
