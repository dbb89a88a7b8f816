#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "functions.hpp"
#include "json.hpp"
#include "specfun/types.hpp"
#include "verify.hpp"

namespace specfun::cli {
namespace {

using nlohmann::json;

constexpr const char* param_names[] = {"k", "m", "b", "n", "x", "q", "j", "a", "z", "phase"};
constexpr double default_tolerance = 1e-10;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json cj(Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

json params_json(const Arguments& args) {
  json p = json::object();
  for (const auto& [name, value] : args.values) p[name] = cj(value);
  if (!args.kind.empty()) p["kind"] = args.kind;
  if (args.exclude_pole) p["exclude_pole"] = true;
  return p;
}

int status_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::nonconvergence:
    case ErrorKind::evaluation:
      return exit_nonconvergence;
    default:
      return exit_domain;
  }
}

double tolerance_from_environment() {
  const char* env = std::getenv("SPECFUN_TOL");
  if (env == nullptr || *env == '\0') return default_tolerance;
  char* end = nullptr;
  const double v = std::strtod(env, &end);
  if (*end != '\0' || !(v > 0.0) || !std::isfinite(v)) {
    throw UsageError(std::string("SPECFUN_TOL must be a positive number, got '") + env + "'");
  }
  return v;
}

QuadratureSpec spec_for(double tol) {
  if (!(tol > 0.0) || !std::isfinite(tol)) throw UsageError("--tol must be positive");
  return QuadratureSpec::with_tolerance(tol, tol / 100.0);
}

// Options shared by eval and table.
struct ParamOptions {
  std::map<std::string, std::string> text;
  std::string kind;
  bool exclude_pole = false;
  std::string function;
  std::optional<double> tol;

  void attach(CLI::App* cmd) {
    for (const char* name : param_names) {
      cmd->add_option(std::string("--") + name, text[name], std::string("parameter ") + name + " as RE[,IM]");
    }
    cmd->add_option("--kind", kind, "trig-deriv function: cot, csc, tan or sec");
    cmd->add_flag("--exclude-pole", exclude_pole, "zeta only: drop the 1/(k-1) term");
    cmd->add_option("--tol", tol, "relative tolerance (default 1e-10 or SPECFUN_TOL)");
  }

  Arguments arguments() const {
    Arguments args;
    for (const auto& [name, value] : text) {
      if (!value.empty()) args.values[name] = parse_complex(value);
    }
    args.kind = kind;
    args.exclude_pole = exclude_pole;
    return args;
  }

  double tolerance() const { return tol ? *tol : tolerance_from_environment(); }
};

const FunctionInfo& lookup(const std::string& name) {
  const FunctionInfo* f = find_function(name);
  if (f == nullptr) throw UsageError("unknown function '" + name + "' (see --help)");
  return *f;
}

int cmd_eval(const ParamOptions& opts, const std::string& format, std::ostream& out, std::ostream& err) {
  const FunctionInfo& f = lookup(opts.function);
  Arguments args = opts.arguments();
  validate_arguments(f, args);
  const QuadratureSpec spec = spec_for(opts.tolerance());
  try {
    const EvalResult r = f.evaluate(args, spec);
    if (format == "json") {
      json rec = {{"schema", 1},          {"function", f.name},        {"params", params_json(args)},
                  {"value", cj(r.value)}, {"err_est", r.err_est},      {"converged", r.converged}};
      if (r.domain_warning) rec["domain_warning"] = true;
      out << rec.dump() << "\n";
    } else if (format == "csv") {
      out << "function,re,im,err_est,converged\n";
      out << f.name << "," << fmt(r.value.real()) << "," << fmt(r.value.imag()) << "," << fmt(r.err_est) << ","
          << (r.converged ? "true" : "false") << "\n";
    } else {
      out << fmt(r.value.real()) << " " << fmt(r.value.imag()) << "\n";
      out << "err_est " << fmt(r.err_est) << "\n";
      out << "converged " << (r.converged ? "true" : "false") << "\n";
    }
    if (!r.converged) {
      err << "warning: quadrature did not reach the requested tolerance\n";
      return exit_nonconvergence;
    }
    return exit_ok;
  } catch (const Error& e) {
    if (format == "json") {
      json rec = {{"schema", 1},
                  {"function", f.name},
                  {"params", params_json(args)},
                  {"error", {{"kind", to_string(e.kind())}, {"message", e.what()}}}};
      out << rec.dump() << "\n";
    }
    err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return status_for(e.kind());
  }
}

struct Sweep {
  std::string name;
  double start = 0.0;
  double stop = 0.0;
  int count = 0;

  double at(int i) const { return count == 1 ? start : start + (stop - start) * i / (count - 1); }
};

Sweep parse_sweep(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos) throw UsageError("--sweep must look like name=START:STOP:COUNT");
  Sweep s;
  s.name = text.substr(0, eq);
  std::string rest = text.substr(eq + 1);
  std::vector<std::string> parts;
  std::stringstream ss(rest);
  for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
  if (parts.size() != 3) throw UsageError("--sweep must look like name=START:STOP:COUNT");
  auto number = [&](const std::string& p) {
    char* end = nullptr;
    const double v = std::strtod(p.c_str(), &end);
    if (p.empty() || *end != '\0' || !std::isfinite(v)) throw UsageError("bad number '" + p + "' in --sweep");
    return v;
  };
  s.start = number(parts[0]);
  s.stop = number(parts[1]);
  const double count = number(parts[2]);
  if (count < 1 || count > 1e6 || std::nearbyint(count) != count) {
    throw UsageError("--sweep COUNT must be a positive integer");
  }
  s.count = static_cast<int>(count);
  return s;
}

int cmd_table(const ParamOptions& opts, const std::vector<std::string>& sweep_text, const std::string& format,
              std::ostream& out) {
  const FunctionInfo& f = lookup(opts.function);
  if (sweep_text.empty() || sweep_text.size() > 2) throw UsageError("table needs one or two --sweep options");
  std::vector<Sweep> sweeps;
  for (const auto& t : sweep_text) sweeps.push_back(parse_sweep(t));
  if (sweeps.size() == 2 && sweeps[0].name == sweeps[1].name) throw UsageError("the two sweeps must differ");
  const Arguments fixed = opts.arguments();
  for (const auto& s : sweeps) {
    if (fixed.values.count(s.name)) throw UsageError("--" + s.name + " is both fixed and swept");
  }
  const QuadratureSpec spec = spec_for(opts.tolerance());

  // Check the request shape once with the first grid point.
  {
    Arguments probe = fixed;
    for (const auto& s : sweeps) probe.values[s.name] = s.start;
    FunctionInfo relaxed = f;
    relaxed.integer_args.clear();
    relaxed.real_args.clear();
    validate_arguments(relaxed, probe);
  }

  const int outer = sweeps[0].count;
  const int inner = sweeps.size() == 2 ? sweeps[1].count : 1;
  json rows = json::array();
  if (format == "csv") {
    for (const auto& s : sweeps) out << s.name << ",";
    out << "re,im,err_est,converged,error\n";
  }
  for (int i = 0; i < outer; ++i) {
    for (int j = 0; j < inner; ++j) {
      Arguments args = fixed;
      json point = json::object();
      args.values[sweeps[0].name] = sweeps[0].at(i);
      point[sweeps[0].name] = sweeps[0].at(i);
      if (sweeps.size() == 2) {
        args.values[sweeps[1].name] = sweeps[1].at(j);
        point[sweeps[1].name] = sweeps[1].at(j);
      }
      std::string error_kind, message;
      EvalResult r;
      try {
        validate_arguments(f, args);
        r = f.evaluate(args, spec);
      } catch (const Error& e) {
        error_kind = to_string(e.kind());
        message = e.what();
      } catch (const UsageError& e) {
        error_kind = "usage";
        message = e.what();
      }
      if (format == "csv") {
        for (const auto& s : sweeps) out << fmt(point[s.name].get<double>()) << ",";
        if (error_kind.empty()) {
          out << fmt(r.value.real()) << "," << fmt(r.value.imag()) << "," << fmt(r.err_est) << ","
              << (r.converged ? "true" : "false") << ",\n";
        } else {
          out << ",,,," << error_kind << "\n";
        }
      } else {
        json row = {{"params", point}};
        if (error_kind.empty()) {
          row["value"] = cj(r.value);
          row["err_est"] = r.err_est;
          row["converged"] = r.converged;
        } else {
          row["error"] = {{"kind", error_kind}, {"message", message}};
        }
        rows.push_back(std::move(row));
      }
    }
  }
  if (format == "json") {
    Arguments shown = fixed;
    json rec = {{"schema", 1}, {"function", f.name}, {"params", params_json(shown)}, {"rows", std::move(rows)}};
    out << rec.dump() << "\n";
  }
  return exit_ok;
}

int cmd_verify(const VerifyOptions& options, const std::string& out_path, std::ostream& out, std::ostream& err) {
  const VerifySummary summary = run_verification(options);
  const std::string text = summary.report.dump(2) + "\n";
  std::ostringstream line;
  line << "suite " << options.suite << ": " << summary.report["case_count"].get<std::size_t>() << " cases, "
       << summary.pass_count << " passed, " << summary.fail_count << " failed, worst discrepancy "
       << summary.report["worst_discrepancy"].dump() << " (" << summary.report["worst_case"].get<std::string>()
       << ")\n";
  if (out_path.empty()) {
    out << text;
    err << line.str();
  } else {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot write report to " << out_path << "\n";
      return exit_usage;
    }
    file << text;
    out << line.str();
  }
  return summary.fail_count == 0 ? exit_ok : exit_verify_failed;
}

std::string function_help() {
  std::ostringstream os;
  os << "Functions (eval, table):\n";
  for (const auto& f : function_table()) {
    os << "  " << f.name << " [";
    bool first = true;
    for (const auto& r : f.required) {
      os << (first ? "" : " ") << "--" << r;
      first = false;
    }
    for (const auto& [name, v] : f.defaults) os << " (--" << name << ")";
    if (f.needs_kind) os << " --kind";
    os << "]  " << f.summary << "\n";
  }
  os << "\nVerification suites and default tolerances:\n";
  for (const auto& s : suite_names()) os << "  " << s << "  " << suite_tolerance(s) << "\n";
  os << "  all  (every suite)\n";
  os << "\nExit status: 0 ok, 1 verification failures, 2 domain/pole/singularity, 3 non-convergence, 64 usage.\n";
  os << "SPECFUN_TOL overrides the default evaluation tolerance of 1e-10.\n";
  return os.str();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Special functions through kernel integral representations", "specfun"};
  app.require_subcommand(1);
  app.footer(function_help());

  ParamOptions eval_opts;
  std::string eval_format = "json";
  CLI::App* eval = app.add_subcommand("eval", "evaluate one function");
  eval->add_option("function", eval_opts.function, "function name")->required();
  eval_opts.attach(eval);
  eval->add_option("--format", eval_format, "json, csv or plain")->check(CLI::IsMember({"json", "csv", "plain"}));

  ParamOptions table_opts;
  std::string table_format = "csv";
  std::vector<std::string> sweeps;
  CLI::App* table = app.add_subcommand("table", "evaluate a function over a parameter grid");
  table->add_option("function", table_opts.function, "function name")->required();
  table_opts.attach(table);
  table->add_option("--sweep", sweeps, "name=START:STOP:COUNT (one or two)")->required();
  table->add_option("--format", table_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  VerifyOptions verify_opts;
  std::string out_path;
  std::optional<double> verify_tol;
  CLI::App* verify = app.add_subcommand("verify", "run a verification suite and write a JSON report");
  std::vector<std::string> accepted = suite_names();
  accepted.push_back("all");
  verify->add_option("--suite", verify_opts.suite, "suite name")->check(CLI::IsMember(accepted));
  verify->add_option("--seed", verify_opts.seed, "seed of the random parameter draws");
  verify->add_option("--tol", verify_tol, "tolerance for every case (default: per suite)");
  verify->add_option("--out", out_path, "report path (default: standard output)");
  verify->add_option("--jobs", verify_opts.jobs, "worker threads, 0 for all cores");
  verify->add_flag("--with-timing", verify_opts.with_timing, "record wall time in the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (*eval) return cmd_eval(eval_opts, eval_format, out, err);
    if (*table) return cmd_table(table_opts, sweeps, table_format, out);
    if (verify_tol && !(*verify_tol > 0.0)) throw UsageError("--tol must be positive");
    verify_opts.tolerance = verify_tol;
    if (verify_opts.jobs == 0) verify_opts.jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    if (verify_opts.jobs < 0) throw UsageError("--jobs must be nonnegative");
    return cmd_verify(verify_opts, out_path, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return exit_usage;
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return status_for(e.kind());
  }
}

}  // namespace specfun::cli
