#include "functions.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "specfun/alt_forms.hpp"
#include "specfun/continuation.hpp"
#include "specfun/gamma.hpp"
#include "specfun/partial_sums.hpp"
#include "specfun/trig_derivs.hpp"

namespace specfun::cli {
namespace {

EvalResult exact(Complex v) {
  EvalResult r;
  r.value = v;
  return r;
}

EvalResult from_partial(const PartialSumResult& p) {
  EvalResult r;
  r.value = p.value;
  r.err_est = p.err_est;
  r.converged = p.converged;
  return r;
}

TrigFunction parse_trig(const std::string& kind) {
  if (kind == "cot") return TrigFunction::cot;
  if (kind == "csc") return TrigFunction::csc;
  if (kind == "tan") return TrigFunction::tan;
  if (kind == "sec") return TrigFunction::sec;
  throw UsageError("--kind must be one of cot, csc, tan, sec");
}

std::vector<FunctionInfo> build_table() {
  using A = const Arguments&;
  using S = const QuadratureSpec&;
  std::vector<FunctionInfo> t;
  t.push_back({"zeta", "Riemann zeta(k); --exclude-pole drops the 1/(k-1) term", {"k"}, {}, {}, {}, false,
               [](A a, S s) { return zeta(a.get("k"), s, a.exclude_pole ? PoleTerm::exclude : PoleTerm::include); }});
  t.push_back({"zeta-deriv0", "q-th derivative of zeta at 0", {"q"}, {}, {"q"}, {}, false,
               [](A a, S s) { return zeta_derivative_at_zero(a.get_int("q"), s); }});
  t.push_back({"hurwitz", "Hurwitz zeta(-k, b)", {"k", "b"}, {}, {}, {}, false,
               [](A a, S s) { return hurwitz_zeta_neg(a.get("k"), a.get("b"), s); }});
  t.push_back({"polylog", "polylogarithm Li_{-k}(e^m)", {"k", "m"}, {}, {}, {}, false,
               [](A a, S s) { return polylog_neg(a.get("k"), a.get("m"), s); }});
  t.push_back({"lerch", "Lerch Phi(e^m, -k, b)", {"k", "m", "b"}, {}, {}, {}, false,
               [](A a, S s) { return lerch_phi_neg(a.get("k"), a.get("m"), a.get("b"), s); }});
  t.push_back({"gamma", "complete Gamma(a)", {"a"}, {}, {}, {}, false,
               [](A a, S) { return exact(gamma_complete(a.get("a"))); }});
  t.push_back({"gamma-upper", "upper incomplete Gamma(a, z)", {"a", "z"}, {}, {}, {}, false,
               [](A a, S) { return exact(gamma_upper(a.get("a"), a.get("z"))); }});
  t.push_back({"harmonic-sum", "sum_{j=1..n} j^k", {"k", "n"}, {}, {}, {}, false,
               [](A a, S s) { return from_partial(harmonic_sum(a.get("k"), a.get("n"), s)); }});
  t.push_back({"faulhaber", "Faulhaber polynomial for sum_{j=1..n} j^(2k-1)", {"k", "n"}, {}, {"k"}, {}, false,
               [](A a, S) { return exact(faulhaber_odd(a.get_int("k"), a.get("n"))); }});
  t.push_back({"hurwitz-partial", "sum_{q=0..n} (q+b)^k", {"k", "b", "n"}, {}, {}, {}, false,
               [](A a, S s) { return from_partial(hurwitz_partial(a.get("k"), a.get("b"), a.get("n"), s)); }});
  t.push_back({"polylog-partial", "sum_{q=1..n} q^k e^(m q)", {"k", "m", "n"}, {}, {}, {}, false,
               [](A a, S s) { return from_partial(polylog_partial(a.get("k"), a.get("m"), a.get("n"), s)); }});
  t.push_back({"lerch-partial", "sum_{q=0..n} (q+b)^k e^(m q)", {"k", "m", "b", "n"}, {}, {}, {}, false,
               [](A a, S s) {
                 return from_partial(lerch_partial(a.get("k"), a.get("m"), a.get("b"), a.get("n"), s));
               }});
  t.push_back({"key-sum", "sum_{j=0..k} (2 pi i n)^(-2j) zeta(2j) / (2k-2j)!", {"k", "n"}, {}, {"k"}, {}, false,
               [](A a, S s) { return key_sum(a.get_int("k"), a.get("n"), s); }});
  t.push_back({"lerch-limit", "x -> 0 limit of the Lerch combination (= zeta(1-2k, n+1))", {"k", "n"}, {}, {"k"}, {},
               false, [](A a, S s) { return lerch_limit(a.get_int("k"), a.get("n"), s); }});
  t.push_back({"trig-deriv", "k-th derivative of cot/csc (a x) or tan/sec (a x + phase)", {"k", "x"},
               {{"a", 1.0}, {"phase", 0.0}}, {"k"}, {}, true, [](A a, S s) {
                 TrigKind kind{parse_trig(a.kind), a.get("a"), a.get("phase")};
                 return trig_deriv(kind, a.get_int("k"), a.get("x"), s);
               }});
  t.push_back({"bernoulli", "Bernoulli number B_j (even j) from zeta(j)", {"j"}, {}, {"j"}, {}, false,
               [](A a, S s) { return exact(bernoulli(a.get_int("j"), s)); }});
  t.push_back({"alt:harmonic-v1", "sum_{j=1..n} j^k, csch^2 form", {"k", "n"}, {}, {}, {}, false,
               [](A a, S s) { return harmonic_sum_v1(a.get("k"), a.get("n"), s); }});
  t.push_back({"alt:harmonic-v2", "sum_{j=1..n} j^k, tan-kernel form", {"k", "n"}, {}, {}, {}, false,
               [](A a, S s) { return harmonic_sum_v2(a.get("k"), a.get("n"), s); }});
  t.push_back({"alt:hurwitz-partial", "sum_{q=0..n} (q+b)^k, tan-kernel form", {"k", "b", "n"}, {}, {}, {}, false,
               [](A a, S s) { return hurwitz_partial_alt(a.get("k"), a.get("b"), a.get("n"), s); }});
  t.push_back({"alt:polylog-partial", "sum_{q=1..n} q^k e^(m q), tan-kernel form", {"k", "m", "n"}, {}, {}, {},
               false, [](A a, S s) { return polylog_partial_alt(a.get("k"), a.get("m"), a.get("n"), s); }});
  t.push_back({"alt:lerch-partial", "sum_{q=0..n} (q+b)^k e^(m q), tan-kernel form", {"k", "m", "b", "n"}, {}, {},
               {}, false,
               [](A a, S s) { return lerch_partial_alt(a.get("k"), a.get("m"), a.get("b"), a.get("n"), s); }});
  t.push_back({"alt:lerch-unit-circle", "Phi(e^(2 pi i x), -k, n+1)", {"x", "k", "n"}, {}, {"k"}, {"x"}, false,
               [](A a, S s) { return lerch_unit_circle(a.get_real("x"), a.get_int("k"), a.get("n"), s); }});
  t.push_back({"alt:lerch-limit-combination",
               "Phi(z, 1-2k, n+1) + (pi i x / k) Phi(z, -2k, n+1), z = e^(2 pi i x)", {"k", "n", "x"}, {}, {"k"},
               {"x"}, false,
               [](A a, S s) { return lerch_limit_combination(a.get_int("k"), a.get("n"), a.get_real("x"), s); }});
  std::sort(t.begin(), t.end(), [](const FunctionInfo& l, const FunctionInfo& r) { return l.name < r.name; });
  return t;
}

}  // namespace

int Arguments::get_int(const std::string& name) const { return static_cast<int>(values.at(name).real()); }

double Arguments::get_real(const std::string& name) const { return values.at(name).real(); }

const std::vector<FunctionInfo>& function_table() {
  static const std::vector<FunctionInfo> table = build_table();
  return table;
}

const FunctionInfo* find_function(const std::string& name) {
  for (const auto& f : function_table()) {
    if (f.name == name) return &f;
  }
  return nullptr;
}

Complex parse_complex(const std::string& text) {
  const auto comma = text.find(',');
  auto parse_real = [&](const std::string& part) {
    char* end = nullptr;
    const double v = std::strtod(part.c_str(), &end);
    if (part.empty() || end != part.c_str() + part.size() || !std::isfinite(v)) {
      throw UsageError("cannot parse '" + text + "' as RE[,IM]");
    }
    return v;
  };
  if (comma == std::string::npos) return {parse_real(text), 0.0};
  return {parse_real(text.substr(0, comma)), parse_real(text.substr(comma + 1))};
}

void validate_arguments(const FunctionInfo& f, Arguments& args) {
  for (const auto& [name, value] : f.defaults) {
    args.values.emplace(name, value);
  }
  for (const auto& name : f.required) {
    if (!args.values.count(name)) {
      throw UsageError(f.name + ": missing required --" + name);
    }
  }
  for (const auto& [name, value] : args.values) {
    const bool known = std::find(f.required.begin(), f.required.end(), name) != f.required.end() ||
                       f.defaults.count(name) != 0;
    if (!known) {
      throw UsageError(f.name + ": --" + name + " is not a parameter of this function");
    }
  }
  for (const auto& name : f.integer_args) {
    const Complex v = args.values.at(name);
    if (v.imag() != 0.0 || std::nearbyint(v.real()) != v.real() || std::abs(v.real()) > 1e6) {
      throw UsageError(f.name + ": --" + name + " must be an integer");
    }
  }
  for (const auto& name : f.real_args) {
    if (args.values.at(name).imag() != 0.0) {
      throw UsageError(f.name + ": --" + name + " must be real");
    }
  }
  if (f.needs_kind && args.kind.empty()) {
    throw UsageError(f.name + ": missing required --kind");
  }
  if (!f.needs_kind && !args.kind.empty()) {
    throw UsageError(f.name + ": --kind is not a parameter of this function");
  }
  if (f.needs_kind) parse_trig(args.kind);
  if (args.exclude_pole && f.name != "zeta") {
    throw UsageError(f.name + ": --exclude-pole applies to zeta only");
  }
}

}  // namespace specfun::cli
