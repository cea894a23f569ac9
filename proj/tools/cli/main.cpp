// Copyright 2026 The hext Authors.
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy at
// http://www.apache.org/licenses/LICENSE-2.0

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hext/checks.hpp"
#include "hext/constants.hpp"
#include "hext/extension.hpp"
#include "hext/inequalities.hpp"
#include "hext/kernels.hpp"
#include "hext/spectral.hpp"

namespace {

using nlohmann::json;

struct Flags {
  std::optional<int> n, m, ell;
  std::optional<double> s, rho, delta, tol;
  std::uint64_t seed = 0;
  std::string out;
  bool quick = false;
  int jobs = 0;
};

json number(double x) {
  if (std::isfinite(x)) return x;
  return std::isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf");
}

void emit(const Flags& f, const std::string& text) {
  if (f.out.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream os(f.out);
  if (!os) throw hext::DomainError("cannot open output file " + f.out);
  os << text << "\n";
}

hext::CheckOptions check_options(const Flags& f) {
  hext::CheckOptions o;
  o.quick = f.quick;
  o.seed = f.seed;
  o.n = f.n;
  o.m = f.m;
  o.ell = f.ell;
  o.s = f.s;
  o.rho = f.rho;
  o.delta = f.delta;
  o.tol = f.tol;
  return o;
}

int run_constants(const Flags& f) {
  const int n = f.n.value_or(1), m = f.m.value_or(1);
  const double s = f.s.value_or(0.5);
  json j = {{"n", n}, {"m", m}, {"s", s}};
  for (const auto& c : hext::constant_table(n, m, s)) {
    j[c.name] = number(c.value);
    j["log_" + c.name] = number(c.log_value);
  }
  if (s > 0.0 && s < 1.0) j["singular_integral"] = hext::singular_integral_constant(n, m, s);
  if (m >= 2 && s > 0.0) j["radon_section"] = hext::radon_section_constant(n, m, s);
  if (m == 1 && s > 0.0 && s < n + 1.0) {
    j["oscillatory_printed"] = hext::cns_oscillatory(n, s);
    j["oscillatory_normalized"] = hext::cns_oscillatory_normalized(n, s);
    j["fundamental_solution"] = hext::fundamental_solution_constant(n, s);
    j["isometry"] = hext::isometry_constant(n, s);
  }
  if (f.ell && s >= *f.ell - 1 && s < *f.ell) {
    const int ell = *f.ell;
    j["ell"] = ell;
    j["higher_order"] = number(hext::higher_order_constant(ell, n, m, s, hext::coeff_table(ell, n, m, s)));
    j["higher_order_printed"] = number(hext::higher_order_constant(
        ell, n, m, s, hext::coeff_table(ell, n, m, s, hext::CoeffSource::kPrintedRecurrence)));
  }
  emit(f, j.dump(2));
  return 0;
}

int run_kernel(const Flags& f, const std::string& kind_name, const std::vector<double>& r,
               const std::vector<double>& zeta, int j_index, bool scan) {
  hext::KernelSpec spec;
  spec.kind = hext::parse_kernel_kind(kind_name);
  spec.n = f.n.value_or(1);
  spec.m = f.m.value_or(1);
  spec.s = f.s.value_or(0.5);
  spec.scale = f.rho.value_or(1.0);
  spec.j = j_index;
  spec.ell = f.ell.value_or(1);
  spec.validate();
  std::ostringstream os;
  os.precision(17);
  if (scan) {
    // w_s against |x|^{-2s} on the unit sphere of the homogeneous norm.
    if (spec.kind != hext::KernelKind::kWeight) throw hext::DomainError("--scan needs --kind weight_w");
    os << "angle,r,t,w_s,norm_power,ratio\n";
    const int steps = f.quick ? 8 : 16;
    const hext::ConvolutionRule rule =
        hext::ConvolutionRule::for_tolerance(f.tol.value_or(1e-6));
    for (int i = 0; i <= steps; ++i) {
      const double phi = (0.5 * M_PI) * i / steps;
      const double rr = std::sqrt(std::cos(phi)), tt = 0.25 * std::sin(phi);
      const double w = hext::weight_w(spec.n, spec.s, rr, tt, rule);
      const double p = hext::homogeneous_power(2.0 * spec.s, rr, tt);
      os << phi << "," << rr << "," << tt << "," << w << "," << p << "," << w / p << "\n";
    }
  } else {
    os << "r,zeta,value\n";
    for (double a : r) {
      for (double b : zeta) os << a << "," << b << "," << hext::evaluate(spec, a, b) << "\n";
    }
  }
  emit(f, os.str());
  return 0;
}

hext::GaussianMixture initial_datum(double alpha, double beta) {
  return hext::GaussianMixture::single(alpha, beta);
}

int run_solve(const Flags& f, const std::string& route_name, double alpha, double beta,
              const std::vector<double>& r, const std::vector<double>& t,
              const std::vector<double>& rho) {
  const int n = f.n.value_or(1);
  const double s = f.s.value_or(0.5);
  const hext::Route route = hext::parse_route(route_name);
  const hext::GaussianMixture g = initial_datum(alpha, beta);
  const hext::FractionalOrder so(s, hext::OrderContext::kExtension);
  hext::QuadratureConfig cfg;
  cfg.rel_tol = f.tol.value_or(1e-6);
  std::optional<hext::ExtensionSolution> u;
  switch (route) {
    case hext::Route::kSpectral:
      u.emplace(hext::solve_spectral(n, g, so, hext::lambda_grid(f.quick ? 45.0 : 60.0), cfg));
      break;
    case hext::Route::kConvolution:
      u.emplace(hext::solve_convolution(hext::heisenberg(n), g.function(), so, cfg));
      break;
    case hext::Route::kHeatSemigroup:
      u.emplace(hext::solve_heat_semigroup(hext::heisenberg(n), g, so, cfg));
      break;
  }
  std::ostringstream os;
  os.precision(17);
  os << "r,t,rho,value\n";
  int status = 0;
  for (double a : r) {
    for (double b : t) {
      for (double c : rho) {
        os << a << "," << b << "," << c << ",";
        try {
          os << (*u)(a, b, c) << "\n";
        } catch (const hext::AccuracyError& e) {
          os << "nan\n";
          std::cerr << "accuracy: " << e.what() << " at (" << a << ", " << b << ", " << c << ")\n";
          status = 1;
        }
      }
    }
  }
  emit(f, os.str());
  return status;
}

int run_dtn(const Flags& f, double alpha, double beta, double r, double t) {
  const int n = f.n.value_or(1);
  const double s = f.s.value_or(0.5);
  const hext::GaussianMixture g = initial_datum(alpha, beta);
  const auto u = hext::solve_spectral(n, g, hext::FractionalOrder(s, hext::OrderContext::kUnit),
                                      hext::lambda_grid(f.quick ? 45.0 : 60.0));
  const hext::Extrapolation e = hext::dtn_limit(u, r, t);
  const double ls = u.spectral()->ls(r, t);
  json j = {{"n", n}, {"s", s}, {"r", r}, {"t", t}, {"limit", e.limit}, {"error", e.error},
            {"ls", ls}, {"dtn_constant", hext::dtn_constant(s)},
            {"predicted", hext::dtn_constant(s) * ls}};
  if (s < 0.5) {
    const hext::Extrapolation l2 = hext::limit2(u, r, t);
    j["limit2"] = l2.limit;
    j["limit2_predicted"] = hext::limit2_constant(s) * ls;
  }
  emit(f, j.dump(2));
  return 0;
}

int run_higher(const Flags& f, double alpha, double beta, double r, double t) {
  const int n = f.n.value_or(1);
  const int ell = f.ell.value_or(2);
  const double s = f.s.value_or(1.5);
  const hext::GaussianMixture g = initial_datum(alpha, beta);
  hext::SpectralExtension sp(g.spectrum(n, hext::lambda_grid(f.quick ? 45.0 : 60.0)), s);
  const hext::Extrapolation e = hext::higher_order_limit(sp, ell, r, t);
  const double ls = sp.ls(r, t);
  json j = {{"n", n}, {"s", s}, {"ell", ell}, {"r", r}, {"t", t}, {"limit", e.limit},
            {"error", e.error}, {"ls", ls}, {"ratio", e.limit / ls},
            {"constant", number(hext::higher_order_constant(ell, n, 1, s, hext::coeff_table(ell, n, 1, s)))},
            {"constant_printed",
             number(hext::higher_order_constant(
                 ell, n, 1, s, hext::coeff_table(ell, n, 1, s, hext::CoeffSource::kPrintedRecurrence)))}};
  emit(f, j.dump(2));
  return 0;
}

int report_suites(const Flags& f, const std::vector<hext::CheckSuite>& suites) {
  json list = json::array();
  bool pass = true;
  for (const auto& s : suites) {
    list.push_back(json::parse(s.to_json()));
    pass = pass && s.pass();
    std::cerr << (s.pass() ? "PASS " : "FAIL ") << s.name << " (" << s.reports.size()
              << " reports, " << s.seconds << " s)\n";
  }
  emit(f, list.size() == 1 ? list[0].dump(2) : list.dump(2));
  return pass ? 0 : 1;
}

int run_suite(const Flags& f, const std::string& which) {
  std::vector<std::string> names;
  for (const auto& c : hext::check_catalog()) {
    const bool acceptance = c.criterion > 0;
    if (which == "all" || (which == "acceptance" && acceptance) || (which == "extra" && !acceptance)) {
      names.push_back(c.name);
    }
  }
  if (names.empty()) throw hext::DomainError("unknown suite '" + which + "' (all, acceptance, extra)");
  return report_suites(f, hext::run_checks(names, check_options(f), f.jobs));
}

void add_common(CLI::App* app, Flags& f) {
  app->add_option("--n", f.n, "Heisenberg dimension n")->check(CLI::PositiveNumber);
  app->add_option("--m", f.m, "centre dimension m")->check(CLI::PositiveNumber);
  app->add_option("--s", f.s, "fractional order s");
  app->add_option("--rho", f.rho, "extension variable or kernel scale")->check(CLI::PositiveNumber);
  app->add_option("--delta", f.delta, "Hardy parameter delta")->check(CLI::PositiveNumber);
  app->add_option("--ell", f.ell, "order of the higher-order limit")->check(CLI::PositiveNumber);
  app->add_option("--tol", f.tol, "tolerance override")->check(CLI::PositiveNumber);
  app->add_option("--seed", f.seed, "seed for randomized test points");
  app->add_option("--out", f.out, "write output to this path");
  app->add_flag("--quick", f.quick, "smaller grids and doubled tolerances");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hext: extension problems and fractional sublaplacians on H-type groups"};
  app.require_subcommand(1);
  app.set_config("--config", "", "TOML-style file with default flag values");
  Flags flags;
  add_common(&app, flags);
  app.fallthrough();

  auto* constants = app.add_subcommand("constants", "closed-form constants as JSON");

  auto* kernel = app.add_subcommand("kernel", "kernel values as CSV");
  std::string kind = "phi";
  std::vector<double> kr = {0.0, 0.5, 1.0}, kz = {0.0, 0.5};
  int j_index = 0;
  bool scan = false;
  kernel->add_option("--kind", kind, "phi, Phi, K, poisson, heat_q, heat_p, weight_w, g, h");
  kernel->add_option("--r", kr, "values of |v|");
  kernel->add_option("--zeta", kz, "values of |z|");
  kernel->add_option("--j", j_index, "index j for g and h");
  kernel->add_flag("--scan", scan, "w_s against |x|^{-2s} over the unit sphere");

  auto* solve = app.add_subcommand("solve", "extension u(r, t, rho) of a Gaussian as CSV");
  std::string route = "spectral";
  double alpha = 1.0, beta = 1.0;
  std::vector<double> sr = {0.0, 0.5, 1.0}, st = {0.0, 0.5}, srho = {0.1, 0.5, 1.0};
  solve->add_option("--route", route, "spectral, convolution or heat");
  solve->add_option("--alpha", alpha, "f = exp(-alpha |v|^2 - beta |z|^2)")->check(CLI::PositiveNumber);
  solve->add_option("--beta", beta)->check(CLI::PositiveNumber);
  solve->add_option("--r", sr, "values of |v|");
  solve->add_option("--t", st, "values of |z|");
  solve->add_option("--rhos", srho, "values of rho");

  auto* dtn = app.add_subcommand("dtn", "Dirichlet-to-Neumann limit against L_s f");
  double pr = 0.5, pt = 0.3;
  for (auto* sub : {dtn}) {
    sub->add_option("--alpha", alpha)->check(CLI::PositiveNumber);
    sub->add_option("--beta", beta)->check(CLI::PositiveNumber);
    sub->add_option("--r", pr, "|v|");
    sub->add_option("--t", pt, "|z|");
  }
  auto* higher = app.add_subcommand("higher", "order-l boundary limit against L_s f");
  higher->add_option("--alpha", alpha)->check(CLI::PositiveNumber);
  higher->add_option("--beta", beta)->check(CLI::PositiveNumber);
  higher->add_option("--r", pr, "|v|");
  higher->add_option("--t", pt, "|z|");

  auto* check = app.add_subcommand("check", "run one named check");
  std::string check_name;
  bool list = false;
  check->add_option("name", check_name, "check name");
  check->add_flag("--list", list, "list check names");

  auto* suite = app.add_subcommand("suite", "run a group of checks: all, acceptance or extra");
  std::string suite_name = "all";
  suite->add_option("name", suite_name, "suite name");
  suite->add_option("--jobs", flags.jobs, "worker threads (0: hardware count)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (flags.s && !std::isfinite(*flags.s)) throw hext::DomainError("--s must be finite");
    if (*constants) return run_constants(flags);
    if (*kernel) return run_kernel(flags, kind, kr, kz, j_index, scan);
    if (*solve) return run_solve(flags, route, alpha, beta, sr, st, srho);
    if (*dtn) return run_dtn(flags, alpha, beta, pr, pt);
    if (*higher) return run_higher(flags, alpha, beta, pr, pt);
    if (*check) {
      if (list || check_name.empty()) {
        for (const auto& c : hext::check_catalog()) {
          std::cout << c.name << "\t" << (c.criterion ? std::to_string(c.criterion) : "-") << "\t"
                    << c.summary << "\n";
        }
        return 0;
      }
      return report_suites(flags, {hext::run_check(check_name, check_options(flags))});
    }
    if (*suite) return run_suite(flags, suite_name);
  } catch (const hext::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const hext::AccuracyError& e) {
    std::cerr << "accuracy: " << e.what() << " (estimate " << e.estimate() << ", error "
              << e.error_bound() << ")\n";
    return 1;
  }
  return 2;
}
