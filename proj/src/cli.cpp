#include "einstein4/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "einstein4/invariants.hpp"
#include "einstein4/json_io.hpp"
#include "einstein4/report.hpp"
#include "einstein4/rng.hpp"
#include "einstein4/sectional.hpp"
#include "einstein4/spinor.hpp"
#include "einstein4/topology.hpp"

namespace einstein4 {

namespace {

struct CliError {
  int code;
  std::string message;
};

Json read_input_json(const std::string& path, std::istream& in, const char* what) {
  if (path.empty()) return parse_stream(in, what);
  std::ifstream f(path);
  if (!f) throw CliError{2, std::string("cannot open input file '") + path + "'"};
  return parse_stream(f, what);
}

void write_output(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty()) {
    out << content;
    return;
  }
  std::ofstream f(path);
  if (!f) throw CliError{2, std::string("cannot open output file '") + path + "'"};
  f << content;
}

Json gate_to_json(const GateResult& g) {
  return Json{{"ok", g.ok}, {"margin", g.margin}, {"detail", g.detail}};
}

Json invariant_report_to_json(const InvariantReport& r) {
  Json j;
  j["model"] = r.model;
  j["volume"] = r.volume;
  j["euler_characteristic"] = r.euler_char;
  j["signature"] = r.signature;
  j["functional"] = r.functional;
  j["integrals"] = Json{{"w_plus_sq", r.integrals.w_plus_sq},
                        {"w_minus_sq", r.integrals.w_minus_sq},
                        {"s_sq_over_24", r.integrals.s_sq_over_24},
                        {"r0_sq_over_2", r.integrals.r0_sq_over_2},
                        {"s_total", r.integrals.s_total}};
  j["euler_bound"] = Json{{"applicable", r.euler_bound.applicable},
                          {"chi", r.euler_bound.chi},
                          {"bound", r.euler_bound.bound},
                          {"margin", r.euler_bound.margin},
                          {"strict", r.euler_bound.strict}};
  auto gap_json = [](const GapCheck& g) {
    Json jg{{"reversed_orientation", g.reversed_orientation},
            {"int_w_plus_sq", g.int_w_plus_sq},
            {"int_w_minus_sq", g.int_w_minus_sq},
            {"int_s_sq_over_24", g.int_s_sq_over_24},
            {"gap_applies", g.gap_applies},
            {"gap_ok", g.gap_ok},
            {"gap_equality", g.gap_equality},
            {"corollary_applies", g.corollary_applies},
            {"corollary_lhs", g.corollary_lhs},
            {"corollary_rhs", g.corollary_rhs},
            {"corollary_ok", g.corollary_ok},
            {"corollary_equality", g.corollary_equality}};
    if (!g.excluded_reason.empty()) jg["excluded_reason"] = g.excluded_reason;
    return jg;
  };
  j["gap"] = gap_json(r.gap);
  j["gap_reversed"] = gap_json(r.gap_reversed);
  j["bishop"] = Json{{"applicable", r.bishop.applicable},
                     {"rescaled_volume", r.bishop.rescaled_volume},
                     {"sphere_volume", r.bishop.sphere_volume},
                     {"margin", r.bishop.margin},
                     {"ok", r.bishop.ok}};
  return j;
}

std::string render_invariants_text(const InvariantReport& r, bool markdown) {
  std::ostringstream os;
  os.precision(15);
  auto row = [&](const std::string& k, double v) {
    if (markdown) {
      os << "| " << k << " | " << v << " |\n";
    } else {
      os << "  " << k;
      for (std::size_t i = k.size(); i < 26; ++i) os << ' ';
      os << v << "\n";
    }
  };
  if (markdown) {
    os << "## model " << r.model << "\n\n| quantity | value |\n|---|---|\n";
  } else {
    os << "model " << r.model << "\n";
  }
  row("volume", r.volume);
  row("euler_characteristic", r.euler_char);
  row("signature", r.signature);
  row("functional_S", r.functional);
  row("int_w_plus_sq", r.integrals.w_plus_sq);
  row("int_w_minus_sq", r.integrals.w_minus_sq);
  row("int_s_sq_over_24", r.integrals.s_sq_over_24);
  row("int_r0_sq_over_2", r.integrals.r0_sq_over_2);
  if (r.euler_bound.applicable) {
    row("euler_bound", r.euler_bound.bound);
    row("euler_bound_margin", r.euler_bound.margin);
  }
  if (r.bishop.applicable) {
    row("bishop_rescaled_volume", r.bishop.rescaled_volume);
    row("bishop_margin", r.bishop.margin);
  }
  return os.str();
}

int cmd_decompose(const std::string& input, const std::string& output, double tol,
                  std::istream& in, std::ostream& out) {
  const Json j = read_input_json(input, in, "decompose");
  const double t = tol > 0.0 ? tol : 1e-9;
  const CurvatureOperator r = operator_from_json(j, t, t);
  write_output(output, decomposition_to_json(decompose(r)).dump(2) + "\n", out);
  return 0;
}

int cmd_certify(const std::string& input, const std::string& output, std::uint64_t seed,
                std::istream& in, std::ostream& out) {
  const Json j = read_input_json(input, in, "certify");
  const CurvatureOperator r = operator_from_json(j);
  MinSectionalOptions opts;
  opts.seed = seed;
  const MinSectionalResult res = min_sectional(r, opts);
  const CurvatureDecomposition d = decompose(r);

  Json o;
  o["min_sectional"] = res.value;
  o["argmin_u"] = Json::array({res.u[0], res.u[1], res.u[2]});
  o["argmin_v"] = Json::array({res.v[0], res.v[1], res.v[2]});
  o["certified"] = res.certified;
  o["iterations"] = res.iterations;
  o["einstein"] = d.is_einstein();
  if (d.is_einstein()) {
    o["min_sectional_einstein"] = min_sectional_einstein(d);
    const WeylSumBoundReport w = weyl_sum_bound_check(d);
    o["weyl_sum_bound"] =
        Json{{"lhs", w.lhs}, {"rhs", w.rhs}, {"margin", w.margin}, {"ok", w.ok}};
  }
  write_output(output, o.dump(2) + "\n", out);
  return res.certified ? 0 : 1;
}

int cmd_chern(const std::string& model, double param_a, double param_b, int order,
              double fd_step, bool homogeneous, const std::string& format,
              const std::string& output, std::ostream& out) {
  QuadratureSpec spec = QuadratureSpec::curvature_defaults();
  if (order > 0) spec.orders = {order, order, order, order};
  if (fd_step > 0.0) spec.fd_step = fd_step;
  if (homogeneous) spec.scheme = Scheme::Homogeneous;
  const ModelManifold m = model_by_name(model, param_a, param_b);
  const InvariantReport rep = invariant_report(m, spec);
  std::string content;
  if (format == "json") {
    content = invariant_report_to_json(rep).dump(2) + "\n";
  } else if (format == "markdown") {
    content = render_invariants_text(rep, true);
  } else if (format == "csv") {
    std::ostringstream os;
    os.precision(15);
    os << "model,volume,euler_characteristic,signature,functional\n";
    os << rep.model << ',' << rep.volume << ',' << rep.euler_char << ',' << rep.signature
       << ',' << rep.functional << '\n';
    content = os.str();
  } else if (format == "text") {
    content = render_invariants_text(rep, false);
  } else {
    throw CliError{2, "unsupported format '" + format + "'"};
  }
  write_output(output, content, out);
  return 0;
}

int cmd_conformal_check(double fd_step, const std::string& format, const std::string& output,
                        std::ostream& out) {
  const ModelManifold m = round_sphere(1.0);
  const Vec4 x(0.31, -0.22, 0.14, 0.4);
  const ScalarFn bump = [](const Vec4& p) {
    return 1.0 + 0.5 * std::exp(-(p - Vec4(0.2, 0.0, -0.1, 0.3)).squaredNorm());
  };
  const double h0 = 4.0 * fd_step;
  const double r1 = conformal_law_residual(m.chart, bump, x, h0);
  const double r2 = conformal_law_residual(m.chart, bump, x, h0 / 2.0);
  const double r3 = conformal_law_residual(m.chart, bump, x, h0 / 4.0);
  const double order12 = std::log2(std::abs(r1) / std::abs(r2));
  const double order23 = std::log2(std::abs(r2) / std::abs(r3));
  const double extrapolated = (4.0 * r2 - r1) / 3.0;
  const ScalarFn one = [](const Vec4&) { return 1.0; };
  const double identity_residual = conformal_law_residual(m.chart, one, x, fd_step);

  const bool pass = order12 > 1.7 && order12 < 2.3 && std::abs(extrapolated) <= 1e-5 &&
                    std::abs(identity_residual) <= 1e-8;
  Json o;
  o["steps"] = Json::array({h0, h0 / 2.0, h0 / 4.0});
  o["residuals"] = Json::array({r1, r2, r3});
  o["order_first_halving"] = order12;
  o["order_second_halving"] = order23;
  o["extrapolated_residual"] = extrapolated;
  o["identity_rescaling_residual"] = identity_residual;
  o["pass"] = pass;
  std::string content;
  if (format == "json") {
    content = o.dump(2) + "\n";
  } else {
    std::ostringstream os;
    os.precision(15);
    os << "conformal transformation law, round sphere with a Gaussian bump\n"
       << "  steps:       " << h0 << " " << h0 / 2.0 << " " << h0 / 4.0 << "\n"
       << "  residuals:   " << r1 << " " << r2 << " " << r3 << "\n"
       << "  order:       " << order12 << " then " << order23 << "\n"
       << "  extrapolated residual: " << extrapolated << "\n"
       << "  identity rescaling residual: " << identity_residual << "\n"
       << (pass ? "PASS" : "FAIL") << "\n";
    content = os.str();
  }
  write_output(output, content, out);
  return pass ? 0 : 1;
}

int cmd_spinor_check(long samples, std::uint64_t seed, const std::string& format,
                     const std::string& output, std::ostream& out) {
  Rng rng(seed);
  double max_dev = 0.0;
  const long ratio_samples = std::min<long>(samples, 2000);
  for (long i = 0; i < ratio_samples; ++i) {
    const auto v = vector_spinor(rng.normal_vec4());
    const auto u = random_symmetric_spinor(4, rng);
    max_dev = std::max(max_dev, std::abs(projection_ratio(v, u) - 0.6));
  }
  const KatoEstimate est = kato_constants_estimate(samples, seed + 1);
  const double target = std::sqrt(3.0 / 5.0);
  const bool pass = max_dev <= 1e-12 && est.cauchy_schwarz_sup >= target - 1e-4 &&
                    est.max_excess <= 1e-10;

  Json o;
  o["ratio_samples"] = ratio_samples;
  o["max_ratio_deviation"] = max_dev;
  o["kato_samples"] = est.samples;
  o["cauchy_schwarz_sup"] = est.cauchy_schwarz_sup;
  o["cauchy_schwarz_target"] = target;
  o["kato_constant"] = est.kato_inf;
  o["kato_target"] = std::sqrt(5.0 / 3.0);
  o["sup_excess"] = est.max_excess;
  o["pass"] = pass;
  std::string content;
  if (format == "json") {
    content = o.dump(2) + "\n";
  } else {
    std::ostringstream os;
    os.precision(15);
    os << "spinor projection identity and Kato constants\n"
       << "  max |ratio - 3/5| over " << ratio_samples << " samples: " << max_dev << "\n"
       << "  Cauchy-Schwarz sup over " << est.samples << " samples: " << est.cauchy_schwarz_sup
       << " (target " << target << ")\n"
       << "  refined constant estimate: " << est.kato_inf << " (target "
       << std::sqrt(5.0 / 3.0) << ")\n"
       << (pass ? "PASS" : "FAIL") << "\n";
    content = os.str();
  }
  write_output(output, content, out);
  return pass ? 0 : 1;
}

int cmd_obstruct(bool have_chi_tau, int chi, int tau, bool have_b, int bplus, int bminus,
                 const std::string& format, const std::string& output, std::ostream& out) {
  if (have_b) {
    chi = 2 + bplus + bminus;
    tau = bplus - bminus;
  } else if (!have_chi_tau) {
    throw CliError{2, "obstruct: provide --chi/--tau or --bplus/--bminus"};
  }

  Json o;
  o["chi"] = chi;
  o["tau"] = tau;
  o["window_gate"] = gate_to_json(chi_tau_window_gate(chi, tau));
  o["hitchin_gate"] = gate_to_json(hitchin_gate(chi, tau));
  if (std::abs(tau) >= 1) {
    const SimplyConnectedResult sc = simply_connected_deduction(tau);
    o["simply_connected"] = Json{{"min_chi", sc.min_chi},
                                 {"admissible", sc.admissible},
                                 {"max_cover_order", sc.max_cover_order},
                                 {"reasoning", sc.reasoning}};
  }
  if (have_b) {
    TopologyDescriptor t;
    t.b_plus = bplus;
    t.b_minus = bminus;
    t.simply_connected = true;
    const PositiveFormVerdict v = positive_intersection_verdict(t);
    o["positive_intersection"] =
        Json{{"hypotheses_met", v.hypotheses_met}, {"conclusion", v.conclusion}};
  }
  std::string content;
  if (format == "json") {
    content = o.dump(2) + "\n";
  } else {
    std::ostringstream os;
    os << "chi = " << chi << ", tau = " << tau << "\n"
       << "  window gate:  " << (o["window_gate"]["ok"].get<bool>() ? "open" : "closed")
       << "  (" << o["window_gate"]["detail"].get<std::string>() << ")\n"
       << "  Hitchin gate: " << (o["hitchin_gate"]["ok"].get<bool>() ? "open" : "closed")
       << "  (" << o["hitchin_gate"]["detail"].get<std::string>() << ")\n";
    if (o.contains("simply_connected")) {
      os << "  simple connectivity: " << o["simply_connected"]["reasoning"].get<std::string>()
         << "\n";
    }
    if (o.contains("positive_intersection")) {
      os << "  positive intersection form: "
         << o["positive_intersection"]["conclusion"].get<std::string>() << "\n";
    }
    content = os.str();
  }
  write_output(output, content, out);
  return 0;
}

int cmd_enumerate(const std::string& format, const std::string& output, std::ostream& out) {
  const auto classes = enumerate_homeotypes();
  std::string content;
  if (format == "json") {
    Json arr = Json::array();
    for (const auto& c : classes) {
      arr.push_back(Json{{"b_plus", c.b_plus},
                         {"b_minus", c.b_minus},
                         {"chi", c.chi},
                         {"tau", c.tau},
                         {"form", c.even_form ? "even" : "odd"},
                         {"representative", c.representative},
                         {"branch", c.branch}});
    }
    Json o;
    o["count"] = classes.size();
    o["note"] =
        "unoriented intersection-form classes of simply connected candidates; the list is a "
        "derived reconstruction from the window gate plus the self-dual classification";
    o["classes"] = arr;
    content = o.dump(2) + "\n";
  } else if (format == "csv") {
    std::ostringstream os;
    os << "b_plus,b_minus,chi,tau,form,representative,branch\n";
    for (const auto& c : classes) {
      os << c.b_plus << ',' << c.b_minus << ',' << c.chi << ',' << c.tau << ','
         << (c.even_form ? "even" : "odd") << ",\"" << c.representative << "\"," << c.branch
         << '\n';
    }
    content = os.str();
  } else if (format == "markdown") {
    std::ostringstream os;
    os << "| b+ | b- | chi | tau | form | representative | branch |\n";
    os << "|---|---|---|---|---|---|---|\n";
    for (const auto& c : classes) {
      os << "| " << c.b_plus << " | " << c.b_minus << " | " << c.chi << " | " << c.tau
         << " | " << (c.even_form ? "even" : "odd") << " | " << c.representative << " | "
         << c.branch << " |\n";
    }
    content = os.str();
  } else {
    std::ostringstream os;
    os << classes.size() << " candidate classes (b+, b-, chi, tau, form, representative)\n";
    for (const auto& c : classes) {
      os << "  (" << c.b_plus << "," << c.b_minus << ")  chi=" << c.chi << " tau=" << c.tau
         << "  " << (c.even_form ? "even" : "odd ") << "  " << c.representative << "  ["
         << c.branch << "]\n";
    }
    content = os.str();
  }
  write_output(output, content, out);
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"curvature decomposition, integral invariants, and obstruction gates for "
               "4-dimensional Einstein geometry"};
  app.set_config("--config");
  app.require_subcommand(1);

  std::string format = "text";
  std::string output;
  std::string input;
  std::uint64_t seed = RunConfig{}.seed;
  double fd_step = 1e-3;
  int quad_order = 0;
  double tol = 0.0;

  auto add_common = [&](CLI::App* sub, bool with_input) {
    sub->add_option("--format", format, "output format: json|csv|markdown|text");
    sub->add_option("--output", output, "output path (default stdout)");
    sub->add_option("--seed", seed, "random seed for fuzzed checks");
    sub->add_option("--fd-step", fd_step, "finite-difference step")->check(CLI::PositiveNumber);
    sub->add_option("--quad-order", quad_order, "Gauss-Legendre order per axis");
    sub->add_option("--tol", tol, "validation tolerance override")
        ->check(CLI::NonNegativeNumber);
    if (with_input) sub->add_option("--input", input, "input file (default stdin)");
  };

  CLI::App* decompose_cmd =
      app.add_subcommand("decompose", "split an operator JSON into its primitive pieces");
  add_common(decompose_cmd, true);

  CLI::App* certify_cmd = app.add_subcommand(
      "certify", "minimize the sectional curvature of an operator and report margins");
  add_common(certify_cmd, true);

  std::string model = "s4";
  double param_a = 1.0, param_b = 1.0;
  bool homogeneous = false;
  CLI::App* chern_cmd =
      app.add_subcommand("chern", "integral invariants of a model manifold");
  chern_cmd->add_option("--model", model, "s4|cp2|s2xs2|t4")->required();
  chern_cmd->add_option("--radius,--param-a", param_a, "radius / side / first factor radius");
  chern_cmd->add_option("--radius-b,--param-b", param_b, "second factor radius");
  chern_cmd->add_flag("--homogeneous", homogeneous,
                      "use the pointwise-times-volume shortcut");
  add_common(chern_cmd, false);
  chern_cmd->add_option("--order", quad_order, "Gauss-Legendre order per axis");

  CLI::App* conf_cmd = app.add_subcommand(
      "conformal-check", "convergence study of the conformal transformation law");
  add_common(conf_cmd, false);

  long samples = 100000;
  CLI::App* spinor_cmd =
      app.add_subcommand("spinor-check", "projection ratio and Kato constant estimates");
  spinor_cmd->add_option("--samples", samples, "sample count")->check(CLI::PositiveNumber);
  add_common(spinor_cmd, false);

  int chi = 0, tau = 0, bplus = 0, bminus = 0;
  CLI::App* obstruct_cmd =
      app.add_subcommand("obstruct", "arithmetic obstruction gates for (chi, tau) or (b+, b-)");
  CLI::Option* chi_opt = obstruct_cmd->add_option("--chi", chi, "Euler characteristic");
  CLI::Option* tau_opt = obstruct_cmd->add_option("--tau", tau, "signature");
  CLI::Option* bp_opt = obstruct_cmd->add_option("--bplus", bplus, "b+");
  CLI::Option* bm_opt = obstruct_cmd->add_option("--bminus", bminus, "b-");
  add_common(obstruct_cmd, false);

  CLI::App* enum_cmd = app.add_subcommand(
      "enumerate", "intersection-form classes of simply connected candidates");
  add_common(enum_cmd, false);

  bool report_all = false;
  long fuzz_count = 2000;
  CLI::App* report_cmd =
      app.add_subcommand("report", "run every check suite and emit a verdict document");
  report_cmd->add_flag("--all", report_all, "run all suites (default)");
  report_cmd->add_option("--fuzz-count", fuzz_count, "sample count for fuzzed checks");
  add_common(report_cmd, false);

  std::vector<std::string> argv_vec = args;
  try {
    // CLI11 consumes a reversed vector without the program name.
    std::vector<std::string> reversed(argv_vec.rbegin(), argv_vec.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (decompose_cmd->parsed()) return cmd_decompose(input, output, tol, in, out);
    if (certify_cmd->parsed()) return cmd_certify(input, output, seed, in, out);
    if (chern_cmd->parsed()) {
      return cmd_chern(model, param_a, param_b, quad_order, fd_step, homogeneous, format,
                       output, out);
    }
    if (conf_cmd->parsed()) return cmd_conformal_check(fd_step, format, output, out);
    if (spinor_cmd->parsed()) return cmd_spinor_check(samples, seed, format, output, out);
    if (obstruct_cmd->parsed()) {
      const bool have_chi_tau = chi_opt->count() > 0 && tau_opt->count() > 0;
      const bool have_b = bp_opt->count() > 0 && bm_opt->count() > 0;
      return cmd_obstruct(have_chi_tau, chi, tau, have_b, bplus, bminus, format, output, out);
    }
    if (enum_cmd->parsed()) return cmd_enumerate(format, output, out);
    if (report_cmd->parsed()) {
      RunConfig cfg;
      cfg.seed = seed;
      cfg.fd_step = fd_step;
      cfg.quad_order = quad_order;
      cfg.tol = tol;
      cfg.format = format;
      cfg.output_path = output;
      cfg.fuzz_count = fuzz_count;
      const VerificationReport rep = run_all_checks(cfg);
      write_output(output, emit_report(rep, format), out);
      return rep.all_pass() ? 0 : 1;
    }
    err << "error: no subcommand selected\n";
    return 2;
  } catch (const CliError& e) {
    err << "error: " << e.message << "\n";
    return e.code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace einstein4
