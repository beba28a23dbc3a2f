#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dilog7/clausen.hpp"
#include "dilog7/context.hpp"
#include "dilog7/expr.hpp"
#include "dilog7/identities.hpp"
#include "dilog7/pslq.hpp"
#include "dilog7/quadrature.hpp"
#include "dilog7/report.hpp"
#include "dilog7/zeta.hpp"

namespace {

using namespace dilog7;

int env_default_digits(int fallback) {
  const char* v = std::getenv("DILOG7_DIGITS");
  if (v == nullptr || *v == '\0') return fallback;
  char* end = nullptr;
  long n = std::strtol(v, &end, 10);
  if (end == nullptr || *end != '\0' || n < 1 || n > 100000) return fallback;
  return static_cast<int>(n);
}

int run_eval(const std::string& function, const std::string& theta, const std::string& s,
             const std::string& a, std::optional<long> d, int digits) {
  PrecisionContext ctx = make_context(digits);
  Real value(ctx.work_bits());
  if (function == "cl2") {
    if (theta.empty()) throw ConfigError("eval cl2 needs --theta");
    value = cl2(eval_expression(theta, ctx), ctx).value;
  } else if (function == "hurwitz") {
    if (s.empty() || a.empty()) throw ConfigError("eval hurwitz needs --s and --a");
    value = hurwitz_zeta(eval_expression(s, ctx), eval_expression(a, ctx), ctx);
  } else if (function == "lseries") {
    if (!d || s.empty()) throw ConfigError("eval lseries needs --d and --s");
    value = dirichlet_l(*d, eval_expression(s, ctx), ctx).value;
  } else {
    throw ConfigError("unknown function '" + function + "' (one of: cl2, hurwitz, lseries)");
  }
  std::cout << value.str(digits) << "\n";
  return 0;
}

int run_integrate(int digits, int max_levels, const std::string& format) {
  PrecisionContext ctx = make_context(digits);
  QuadratureResult q = integral_i7(ctx, max_levels);
  if (!q.converged) {
    std::cerr << "error: quadrature did not converge within " << max_levels
              << " levels (error estimate " << q.error_estimate.str(3) << ")\n";
    return 2;
  }
  if (format == "json") {
    std::cout << "{\"value\": \"" << q.value.str(digits) << "\", \"error_estimate\": \""
              << q.error_estimate.str(3) << "\", \"levels\": " << q.levels_used
              << ", \"nodes\": " << q.nodes_evaluated << "}\n";
  } else {
    std::cout << "value          " << q.value.str(digits) << "\n"
              << "error estimate " << q.error_estimate.str(3) << "\n"
              << "levels         " << q.levels_used << "\n"
              << "nodes          " << q.nodes_evaluated << "\n";
  }
  return 0;
}

int run_verify(RunConfig config, const std::vector<std::string>& names,
               const std::string& out_path) {
  for (const std::string& name : names) {
    std::optional<IdentityId> id = parse_identity(name);
    if (!id) throw ConfigError("unknown identity '" + name + "'");
    config.identities.push_back(*id);
  }
  if (!config.all && config.identities.empty()) {
    throw ConfigError("select identities with --identity or pass --all");
  }
  ReportDocument doc = run_verifications(config);
  std::string rendered = config.output_format == "json" ? to_json(doc) : to_text(doc);
  if (out_path.empty()) {
    std::cout << rendered;
  } else {
    std::ofstream out(out_path);
    if (!out) throw ConfigError("cannot open output file '" + out_path + "'");
    out << rendered;
  }
  return exit_code(doc);
}

int run_pslq(const std::vector<std::string>& exprs, int digits, long norm_bound,
             long max_iterations) {
  PrecisionContext ctx = make_context(digits);
  std::vector<Real> values;
  values.reserve(exprs.size());
  for (const std::string& e : exprs) values.push_back(eval_expression(e, ctx));

  PslqResult r = pslq(values, ctx, norm_bound, max_iterations);
  switch (r.status) {
    case PslqStatus::kRelationFound: {
      std::cout << "relation found after " << r.iterations << " iterations\n";
      std::cout << "coefficients:";
      for (long c : r.relation->coefficients) std::cout << " " << c;
      std::cout << "\nresidual: " << r.relation->residual.str(3) << "\n";
      return 0;
    }
    case PslqStatus::kNoRelationWithinBound:
      std::cout << "no relation with max |c_i| <= " << norm_bound
                << " (Euclidean norms below " << r.exclusion_bound.str(6)
                << " are excluded after " << r.iterations << " iterations)\n";
      return 0;
    case PslqStatus::kPrecisionExhausted:
      std::cerr << "error: working precision exhausted after " << r.iterations
                << " iterations without a confirmed relation\n";
      return 2;
    case PslqStatus::kIterationLimit:
      std::cerr << "error: iteration limit (" << max_iterations
                << ") reached; exclusion bound " << r.exclusion_bound.str(6) << "\n";
      return 2;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"high-precision Clausen / Hurwitz zeta / Dirichlet L toolkit"};
  app.require_subcommand(1);

  // eval
  auto* eval_cmd = app.add_subcommand("eval", "evaluate a special function");
  std::string eval_fn;
  std::string opt_theta, opt_s, opt_a;
  std::optional<long> opt_d;
  int eval_digits = env_default_digits(32);
  eval_cmd->add_option("function", eval_fn, "one of: cl2, hurwitz, lseries")->required();
  eval_cmd->add_option("--theta", opt_theta, "angle expression, e.g. 'pi/2'");
  eval_cmd->add_option("--s", opt_s, "exponent s (> 1)");
  eval_cmd->add_option("--a", opt_a, "Hurwitz shift a (> 0)");
  eval_cmd->add_option("--d", opt_d, "L-series modulus (nonzero integer)");
  eval_cmd->add_option("--digits", eval_digits, "decimal digits to print");

  // integrate
  auto* int_cmd = app.add_subcommand("integrate", "evaluate the I7 integral by tanh-sinh");
  int int_digits = env_default_digits(64);
  int int_levels = kDefaultMaxLevels;
  std::string int_format = "text";
  int_cmd->add_option("--digits", int_digits, "decimal digits");
  int_cmd->add_option("--max-levels", int_levels, "quadrature level cap");
  int_cmd->add_option("--format", int_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  // verify
  auto* ver_cmd = app.add_subcommand("verify", "run identity verifications");
  RunConfig config;
  config.digits = env_default_digits(64);
  std::vector<std::string> identity_names;
  std::string out_path;
  int required = -1;
  ver_cmd->add_flag("--all", config.all, "verify every identity");
  ver_cmd->add_option("--identity", identity_names, "identity id (repeatable)");
  ver_cmd->add_option("--digits", config.digits, "working decimal digits");
  ver_cmd->add_option("--required", required, "required digits of agreement");
  ver_cmd->add_option("--format", config.output_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  ver_cmd->add_option("--jobs", config.jobs, "concurrent verifications");
  ver_cmd->add_option("--max-levels", config.max_levels, "quadrature level cap");
  ver_cmd->add_option("--out", out_path, "write the report to a file instead of stdout");

  // pslq
  auto* pslq_cmd = app.add_subcommand("pslq", "integer relation detection");
  std::vector<std::string> pslq_exprs;
  int pslq_digits = env_default_digits(120);
  long pslq_norm_bound = 100;
  long pslq_max_iter = 20000;
  pslq_cmd->add_option("values", pslq_exprs, "constant expressions (at least two)")
      ->required()
      ->expected(-2);
  pslq_cmd->add_option("--digits", pslq_digits, "working decimal digits");
  pslq_cmd->add_option("--norm-bound", pslq_norm_bound, "largest admissible |coefficient|");
  pslq_cmd->add_option("--max-iterations", pslq_max_iter, "iteration budget");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (eval_cmd->parsed()) return run_eval(eval_fn, opt_theta, opt_s, opt_a, opt_d, eval_digits);
    if (int_cmd->parsed()) return run_integrate(int_digits, int_levels, int_format);
    if (ver_cmd->parsed()) {
      if (required >= 0) config.required_digits = required;
      return run_verify(config, identity_names, out_path);
    }
    if (pslq_cmd->parsed()) return run_pslq(pslq_exprs, pslq_digits, pslq_norm_bound, pslq_max_iter);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ConvergenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
