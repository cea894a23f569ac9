// Copyright 2026 The hext Authors.
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy at
// http://www.apache.org/licenses/LICENSE-2.0

#include "hext/kernels.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <numbers>

namespace hext {
namespace {

constexpr double kPi = std::numbers::pi;

double norm_form(double rho, double r, double zeta) {
  double X = rho * rho + r * r;
  return X * X + 16.0 * zeta * zeta;
}

// log(x / sinh x) for x > 0 without overflow.
double log_x_over_sinh(double x) {
  if (x < 1e-4) return -x * x / 6.0;
  return std::log(2.0 * x) - x - std::log1p(-std::exp(-2.0 * x));
}

double coth(double x) { return x < 1e-8 ? 1.0 / x : 1.0 / std::tanh(x); }

void require_scale(double rho, const char* who) {
  if (!(rho > 0.0)) throw DomainError(std::string(who) + ": scale parameter must be > 0");
}

}  // namespace

double phi(int n, int m, double s, double rho, double r, double zeta) {
  return std::pow(norm_form(rho, r, zeta), -0.5 * (n + m + s));
}

double Phi(int n, int m, double s, double rho, double r, double zeta) {
  require_scale(rho, "Phi");
  return c1(n, m, s) * std::pow(rho, 2.0 * s) * phi(n, m, s, rho, r, zeta);
}

double dPhi_drho(int n, int m, double s, double rho, double r, double zeta) {
  require_scale(rho, "dPhi_drho");
  const double X = rho * rho + r * r;
  const double D = X * X + 16.0 * zeta * zeta;
  const double p = 0.5 * (n + m + s);
  return c1(n, m, s) * std::pow(rho, 2.0 * s - 1.0) * std::pow(D, -p) *
         (2.0 * s - 4.0 * p * rho * rho * X / D);
}

double K_kernel(int n, int m, double s, double rho, double r, double zeta) {
  require_scale(rho, "K_kernel");
  const double X = rho * rho + r * r;
  const double D = X * X + 16.0 * zeta * zeta;
  return 2.0 * (n + m - s) * std::pow(rho, 2.0 * (1.0 - s)) * X / std::sqrt(D) *
         phi(n, m, 1.0 - s, rho, r, zeta);
}

double poisson_kernel(int n, int m, double s, double rho, double r, double zeta) {
  require_scale(rho, "poisson_kernel");
  const double p = 0.5 * (n + m + s);
  return std::pow(rho, p) * std::pow(norm_form(rho, r, zeta), -p);
}

double g_kernel(int j, double rho, double r, double zeta) {
  if (j < 0) throw DomainError("g_kernel: j must be >= 0");
  if (j == 0) return 1.0;
  const double X = rho * rho + r * r;
  const double D = X * X + 16.0 * zeta * zeta;
  return std::pow(X / std::sqrt(D), j);
}

double h_kernel(int j, int n, int m, double s, double rho, const CoeffTable& table, double r,
                double zeta) {
  if (j < 0 || j > table.ell) throw DomainError("h_kernel: need 0 <= j <= ell");
  const int ell = table.ell;
  return table.coeffs[j] * g_kernel(j, rho, r, zeta) * std::pow(rho, 2.0 * (ell - s)) *
         phi(n, m, ell - s, rho, r, zeta);
}

double homogeneous_power(double p, double r, double zeta) {
  const double N4 = r * r * r * r + 16.0 * zeta * zeta;
  return std::pow(N4, -0.25 * p);
}

double heat_q_profile(int n, double t, double r, double lambda) {
  lambda = std::abs(lambda);
  const double x = t * lambda;
  if (x == 0.0) return std::pow(4.0 * kPi * t, -n) * std::exp(-r * r / (4.0 * t));
  const double logv = -n * std::log(4.0 * kPi * t) + n * log_x_over_sinh(x) -
                      0.25 * lambda * coth(x) * r * r;
  return std::exp(logv);
}

double heat_p_profile(double s, double t, double rho, double lambda) {
  lambda = std::abs(lambda);
  const double x = t * lambda;
  if (x == 0.0) return std::pow(4.0 * kPi * t, -s - 1.0) * std::exp(-rho * rho / (4.0 * t));
  const double logv = -(s + 1.0) * std::log(4.0 * kPi * t) + (s + 1.0) * log_x_over_sinh(x) -
                      0.25 * lambda * coth(x) * rho * rho;
  return std::exp(logv);
}

double heat_q(int n, int m, double t, double r, double zeta, const QuadratureConfig& cfg) {
  if (n < 1 || m < 1) throw DomainError("heat_q: n and m must be >= 1");
  if (m > 3) throw DomainError("heat_q: centre dimension m must be 1, 2 or 3");
  require_scale(t, "heat_q");
  QuadratureConfig local = cfg;
  local.tail_cut = 1.0 / t;
  return hankel_transform([&](double l) { return heat_q_profile(n, t, r, l); }, m, zeta, local);
}

double heat_p(int m, double s, double t, double rho, double zeta, const QuadratureConfig& cfg) {
  if (m < 1 || m > 3) throw DomainError("heat_p: centre dimension m must be 1, 2 or 3");
  if (!(s > -1.0)) throw DomainError("heat_p: requires s > -1");
  require_scale(t, "heat_p");
  QuadratureConfig local = cfg;
  local.tail_cut = 1.0 / t;
  return hankel_transform([&](double l) { return heat_p_profile(s, t, rho, l); }, m, zeta, local);
}

double oscillatory_Phi_integral(int n, double s, double v_norm, double w,
                                const QuadratureConfig& cfg) {
  if (n < 1) throw DomainError("oscillatory_Phi_integral: n must be >= 1");
  if (!(s > 0.0 && s < 1.0)) throw DomainError("oscillatory_Phi_integral: requires 0 < s < 1");
  const double a = n + s + 1.0;
  const double A = 1.0 + v_norm * v_norm;
  const double inf = std::numeric_limits<double>::infinity();
  QuadratureConfig inner = cfg.with_rel_tol(0.01 * cfg.rel_tol);
  inner.abs_tol = 0.0;
  // t-integral at fixed lambda, in y = log(t lambda).
  auto G = [&](double lambda) {
    if (lambda == 0.0) return gamma(a - 1.0) * std::pow(4.0 / A, a - 1.0);
    const double mu = 0.25 * lambda * A;
    auto f = [&](double y) {
      const double tau = std::exp(y);
      if (!(tau > 0.0) || !std::isfinite(tau)) return 0.0;
      const double lv = std::log(tau) + a * (log_x_over_sinh(tau) - std::log(tau)) - mu * coth(tau);
      return std::exp(lv);
    };
    const double c0 = std::log(std::min(1.0, mu / (a - 1.0)));
    QuadratureConfig in = inner;
    in.tail_cut = 2.0;
    double val = integrate_1d(f, -inf, c0, in) + integrate_1d(f, c0, inf, in);
    return std::pow(lambda, a - 1.0) * val;
  };
  QuadratureConfig outer = cfg;
  outer.tail_cut = 4.0 / A;
  outer.abs_tol = 0.0;
  return 2.0 * integrate_1d([&](double l) { return std::cos(l * w) * G(l); }, 0.0, inf, outer);
}

double psi_s(int n, double s, double r, double t, const ConvolutionRule& rule) {
  if (!(s > 0.0 && s < 1.0)) throw DomainError("psi_s: requires 0 < s < 1");
  const int Q = 2 * n + 2;
  BiRadialFunction phis{[n, s](double rr, double z) { return homogeneous_power(n + 1 + s, rr, z); },
                        0.0, "phi_s"};
  BiRadialFunction riesz{[Q, s](double rr, double z) { return homogeneous_power(Q - 2 * s, rr, z); },
                         0.0, "riesz"};
  return c1(n, 1, s) * convolve_biradial(n, phis, riesz, r, t, rule);
}

double weight_w(int n, double s, double r, double t, const ConvolutionRule& rule) {
  if (r == 0.0 && t == 0.0) throw DomainError("weight_w: undefined at the identity");
  return homogeneous_power(n + 1 + s, r, t) / psi_s(n, s, r, t, rule);
}

double weight_w(const GroupParams& g, const FractionalOrder& s, const Point& x,
                const QuadratureConfig& cfg) {
  if (g.m() != 1) throw DomainError("weight_w: only centre dimension m = 1 is supported");
  if (!(s.value() > 0.0 && s.value() < 1.0)) throw DomainError("weight_w: requires 0 < s < 1");
  const double r = x.v.norm(), t = x.z(0);
  ConvolutionRule rule = ConvolutionRule::for_tolerance(cfg.rel_tol);
  double fine = weight_w(g.n(), s.value(), r, t, rule);
  double coarse = weight_w(g.n(), s.value(), r, t, rule.coarser());
  double err = std::abs(fine - coarse);
  if (err > std::max(cfg.abs_tol, cfg.rel_tol * std::abs(fine))) {
    throw AccuracyError("weight_w: tolerance not reached", fine, err);
  }
  return fine;
}

KernelKind parse_kernel_kind(const std::string& name) {
  static const std::map<std::string, KernelKind> kinds = {
      {"phi", KernelKind::kPhi},         {"Phi", KernelKind::kPhiNormalized},
      {"K", KernelKind::kK},             {"poisson", KernelKind::kPoisson},
      {"heat_q", KernelKind::kHeatQ},    {"heat_p", KernelKind::kHeatP},
      {"weight_w", KernelKind::kWeight}, {"g", KernelKind::kG},
      {"h", KernelKind::kH}};
  auto it = kinds.find(name);
  if (it == kinds.end()) throw DomainError("unknown kernel kind: " + name);
  return it->second;
}

std::string kernel_kind_name(KernelKind kind) {
  switch (kind) {
    case KernelKind::kPhi: return "phi";
    case KernelKind::kPhiNormalized: return "Phi";
    case KernelKind::kK: return "K";
    case KernelKind::kPoisson: return "poisson";
    case KernelKind::kHeatQ: return "heat_q";
    case KernelKind::kHeatP: return "heat_p";
    case KernelKind::kWeight: return "weight_w";
    case KernelKind::kG: return "g";
    case KernelKind::kH: return "h";
  }
  return "unknown";
}

void KernelSpec::validate() const {
  if (n < 1 || m < 1) throw DomainError("KernelSpec: n and m must be >= 1");
  if (!(scale > 0.0)) throw DomainError("KernelSpec: scale must be > 0");
  switch (kind) {
    case KernelKind::kPhiNormalized:
      if (!(s > 0.0)) throw DomainError("KernelSpec: Phi needs s > 0");
      break;
    case KernelKind::kK:
    case KernelKind::kWeight:
      if (!(s > 0.0 && s < 1.0)) throw DomainError("KernelSpec: kernel needs 0 < s < 1");
      if (kind == KernelKind::kWeight && m != 1) throw DomainError("KernelSpec: weight_w needs m = 1");
      break;
    case KernelKind::kHeatQ:
    case KernelKind::kHeatP:
      if (m > 3) throw DomainError("KernelSpec: heat kernels need m <= 3");
      break;
    case KernelKind::kG:
    case KernelKind::kH:
      if (j < 0 || j > ell) throw DomainError("KernelSpec: need 0 <= j <= ell");
      break;
    default:
      break;
  }
}

double evaluate(const KernelSpec& spec, double r, double zeta, const QuadratureConfig& cfg) {
  spec.validate();
  const int n = spec.n, m = spec.m;
  const double s = spec.s, rho = spec.scale;
  switch (spec.kind) {
    case KernelKind::kPhi: return phi(n, m, s, rho, r, zeta);
    case KernelKind::kPhiNormalized: return Phi(n, m, s, rho, r, zeta);
    case KernelKind::kK: return K_kernel(n, m, s, rho, r, zeta);
    case KernelKind::kPoisson: return poisson_kernel(n, m, s, rho, r, zeta);
    case KernelKind::kHeatQ: return heat_q(n, m, rho, r, zeta, cfg);
    case KernelKind::kHeatP: return heat_p(m, s, rho, r, zeta, cfg);
    case KernelKind::kWeight:
      return weight_w(n, s, r, zeta, ConvolutionRule::for_tolerance(cfg.rel_tol));
    case KernelKind::kG: return g_kernel(spec.j, rho, r, zeta);
    case KernelKind::kH:
      return h_kernel(spec.j, n, m, s, rho, coeff_table(spec.ell, n, m, s), r, zeta);
  }
  return 0.0;
}

double evaluate(const KernelSpec& spec, const Point& x, const QuadratureConfig& cfg) {
  if (x.v.size() != 2 * spec.n || x.z.size() != spec.m) {
    throw DomainError("evaluate: point dimension does not match the kernel");
  }
  return evaluate(spec, x.v.norm(), x.z.norm(), cfg);
}

BiRadialFunction kernel_function(const KernelSpec& spec) {
  spec.validate();
  if (spec.kind == KernelKind::kHeatQ || spec.kind == KernelKind::kHeatP ||
      spec.kind == KernelKind::kWeight) {
    throw DomainError("kernel_function: only closed-form kernels are supported");
  }
  auto copy = std::make_shared<KernelSpec>(spec);
  auto table = std::make_shared<CoeffTable>(coeff_table(spec.ell, spec.n, spec.m, spec.s));
  BiRadialFunction f;
  f.scale = spec.scale;
  f.label = kernel_kind_name(spec.kind);
  switch (spec.kind) {
    case KernelKind::kPhi:
      f.value = [c = copy](double r, double z) { return phi(c->n, c->m, c->s, c->scale, r, z); };
      break;
    case KernelKind::kPhiNormalized: {
      const double pref = c1(spec.n, spec.m, spec.s) * std::pow(spec.scale, 2.0 * spec.s);
      f.value = [c = copy, pref](double r, double z) {
        return pref * phi(c->n, c->m, c->s, c->scale, r, z);
      };
      break;
    }
    case KernelKind::kH:
      f.value = [c = copy, table](double r, double z) {
        return h_kernel(c->j, c->n, c->m, c->s, c->scale, *table, r, z);
      };
      break;
    default:
      f.value = [c = copy](double r, double z) { return evaluate(*c, r, z); };
      break;
  }
  return f;
}

}  // namespace hext
