// Copyright 2026 The hext Authors.
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy at
// http://www.apache.org/licenses/LICENSE-2.0

#include "hext/inequalities.hpp"

#include <cmath>
#include <limits>

#include "hext/constants.hpp"
#include "hext/convolution.hpp"
#include "hext/kernels.hpp"

namespace hext {
namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kInf = std::numeric_limits<double>::infinity();

void require_unit(double s, const char* who) {
  if (!(s > 0.0 && s < 1.0)) throw DomainError(std::string(who) + ": requires 0 < s < 1");
}

std::map<std::string, double> params_of(int n, double s) { return {{"n", n}, {"s", s}}; }

// int over R of g(e^u) e^{p u} du, split at u = log(scale).
double log_radial(const RealFunction& g, double p, double scale, const QuadratureConfig& cfg) {
  const double u0 = std::log(scale);
  QuadratureConfig c = cfg;
  c.abs_tol = 0.0;
  c.tail_cut = 4.0;
  auto h = [&](double u) {
    const double x = std::exp(u);
    if (!(x > 0.0) || !std::isfinite(x)) return 0.0;
    const double v = g(x);
    return v == 0.0 ? 0.0 : std::copysign(std::exp(std::log(std::abs(v)) + p * u), v);
  };
  return integrate_1d(h, -kInf, u0, c) + integrate_1d(h, u0, kInf, c);
}

}  // namespace

std::vector<double> energy_coefficients(int n, double s, int count, const QuadratureConfig& cfg) {
  if (n < 1 || count < 1) throw DomainError("energy_coefficients: need n >= 1 and count >= 1");
  require_unit(s, "energy_coefficients");
  // Gauss panels in u = log a. Below a0 the integrand is a power law in a, and
  // the derivative multipliers lose digits to cancellation like a^{-s}.
  const double u_lo = std::log(1e-10);
  const double u_hi = std::log(80.0);
  const QuadratureRule rule =
      gauss_legendre(u_lo, u_hi, static_cast<int>(std::ceil(u_hi - u_lo)), 10);
  std::vector<double> e(count, 0.0);
  // m_k = z^s e^{-z/2} w_k / Gamma(s) at z = 2a, and d/dz m_k from
  // z w_k' = (b_k - s) w_{k+1} - b_k w_k.
  auto multipliers = [&](double a, std::vector<double>& m, std::vector<double>& ma) {
    const double z = 2.0 * a;
    const std::vector<double> w = confluent_sequence(n, s, z, count + 1, cfg);
    const double front = std::exp(-0.5 * z - log_gamma(s));
    const double zs = std::pow(z, s), zs1 = zs / z;
    m.resize(count);
    ma.resize(count);
    for (int k = 0; k < count; ++k) {
      const double b = 0.5 * (2.0 * k + n + 1.0 + s);
      m[k] = front * zs * w[k];
      const double dz = front * ((s - b) * zs1 * w[k] - 0.5 * zs * w[k] + (b - s) * zs1 * w[k + 1]);
      ma[k] = 2.0 * dz;
    }
  };
  std::vector<double> m, ma;
  for (std::size_t q = 0; q < rule.size(); ++q) {
    const double a = std::exp(rule.nodes[q]);
    multipliers(a, m, ma);
    const double w = rule.weights[q] * std::pow(a, 1.0 - s);
    for (int k = 0; k < count; ++k) {
      e[k] += w * ((2.0 * k + n + a) * m[k] * m[k] + a * ma[k] * ma[k]);
    }
  }
  const double a0 = std::exp(u_lo);
  multipliers(a0, m, ma);
  for (int k = 0; k < count; ++k) {
    e[k] += std::pow(a0, 1.0 - s) * (2.0 * k + n) * m[k] * m[k] / (1.0 - s) +
            std::pow(a0, 2.0 - s) * ma[k] * ma[k] / s;
  }
  const double front = std::pow(2.0, 1.0 - 2.0 * s);
  for (double& x : e) x *= front;
  return e;
}

double energy(const LaguerreSpectrum& f, double s, const QuadratureConfig& cfg) {
  f.validate();
  const int K = f.k_max() + 1;
  const std::vector<double> e = energy_coefficients(f.n, s, K, cfg);
  double total = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double lam = f.lambda[i];
    double pw = plancherel_weight(f.n, 0, lam);
    double sum = 0.0;
    for (std::size_t k = 0; k < f.coeffs[i].size(); ++k) {
      const double c = f.coeffs[i][k];
      sum += pw * c * c * e[k];
      pw *= (k + f.n) / (k + 1.0);
    }
    total += f.weight[i] * std::pow(lam, s) * sum;
  }
  return total;
}

double ls_quadratic_form(const LaguerreSpectrum& f, double s) {
  f.validate();
  const int n = f.n;
  double total = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double lam = f.lambda[i];
    // Plancherel weight and multiplier advanced by their ratios in k.
    double pw = plancherel_weight(n, 0, lam);
    double mult = ls_multiplier(n, 0, lam, s);
    double sum = 0.0;
    for (std::size_t k = 0; k < f.coeffs[i].size(); ++k) {
      const double c = f.coeffs[i][k];
      sum += pw * mult * c * c;
      const double b = 0.5 * (2.0 * k + n + 1.0 + s);
      pw *= (k + n) / (k + 1.0);
      mult *= b / (b - s);
    }
    total += f.weight[i] * sum;
  }
  return total;
}

CheckReport energy_identity(const LaguerreSpectrum& f, double s, double tol,
                            const QuadratureConfig& cfg) {
  const double lhs = energy(f, s, cfg);
  const double rhs = dtn_constant(s) * ls_quadratic_form(f, s);
  return CheckReport::equality("energy_identity", params_of(f.n, s), lhs, rhs, tol,
                               "energy by Plancherel in (v, z) and quadrature in rho");
}

double energy_direct(int n, const ExtensionField& u, double s, const QuadratureConfig& cfg) {
  require_unit(s, "energy_direct");
  if (!u.value || !u.gradient) throw DomainError("energy_direct: field needs value and gradient");
  const double scale = u.scale > 0.0 ? u.scale : 1.0;
  QuadratureConfig inner = cfg;
  inner.abs_tol = 0.0;
  auto slice = [&](double rho) {
    auto F = [&](double r, double t) {
      const auto g = u.gradient(r, t, rho);
      const double centre = g[1] == 0.0 ? 0.0 : 0.25 * (r * r + rho * rho) * g[1] * g[1];
      return g[0] * g[0] + centre + g[2] * g[2];
    };
    return integrate_biradial(n, 1, F, inner);
  };
  return log_radial(slice, 2.0 - 2.0 * s, scale, cfg);
}

double hardy_weight(int n, double s, double delta, double r, double t) {
  const double d = delta * delta + r * r;
  return c2(n, 1, s) * std::pow(delta, 2.0 * s) * std::pow(d * d + 16.0 * t * t, -s);
}

double trace_hardy_rhs(int n, const BiRadialFunction& trace, double s, double delta,
                       const QuadratureConfig& cfg) {
  require_unit(s, "trace_hardy_rhs");
  if (!(delta > 0.0)) throw DomainError("trace_hardy_rhs: delta must be > 0");
  auto F = [&](double r, double t) {
    const double v = trace(r, t);
    return v == 0.0 ? 0.0 : v * v * hardy_weight(n, s, delta, r, t);
  };
  return dtn_constant(s) * integrate_biradial(n, 1, F, cfg);
}

CheckReport trace_hardy_gap(const BiRadialFunction& f, const LaguerreSpectrum& spectrum, double s,
                            double delta, const QuadratureConfig& cfg) {
  const double lhs = energy(spectrum, s, cfg);
  const double rhs = trace_hardy_rhs(spectrum.n, f, s, delta, cfg);
  auto p = params_of(spectrum.n, s);
  p["delta"] = delta;
  return CheckReport::inequality("trace_hardy", p, lhs, rhs, 1e-3, "energy of the extension of f");
}

CheckReport trace_hardy_gap(int n, const ExtensionField& u, double s, double delta,
                            const QuadratureConfig& cfg) {
  const double lhs = energy_direct(n, u, s, cfg);
  BiRadialFunction trace{[&](double r, double t) { return u.value(r, t, 0.0); }, u.scale, "trace"};
  const double rhs = trace_hardy_rhs(n, trace, s, delta, cfg);
  auto p = params_of(n, s);
  p["delta"] = delta;
  return CheckReport::inequality("trace_hardy", p, lhs, rhs, 1e-3, "energy by direct quadrature");
}

CheckReport hardy_nonhomogeneous(const BiRadialFunction& f, const LaguerreSpectrum& spectrum,
                                 double s, double delta, const QuadratureConfig& cfg) {
  require_unit(s, "hardy_nonhomogeneous");
  if (!(delta > 0.0)) throw DomainError("hardy_nonhomogeneous: delta must be > 0");
  const int n = spectrum.n;
  const double lhs = ls_quadratic_form(spectrum, s);
  auto F = [&](double r, double t) {
    const double v = f(r, t);
    return v == 0.0 ? 0.0 : v * v * hardy_weight(n, s, delta, r, t);
  };
  const double rhs = integrate_biradial(n, 1, F, cfg);
  auto p = params_of(n, s);
  p["delta"] = delta;
  return CheckReport::inequality("hardy_nonhomogeneous", p, lhs, rhs, 1e-3);
}

CheckReport hardy_nonhomogeneous_extremal(int n, double s, double delta, const LambdaGrid& grid) {
  require_unit(s, "hardy_nonhomogeneous_extremal");
  if (!(delta > 0.0)) throw DomainError("hardy_nonhomogeneous_extremal: delta must be > 0");
  const LaguerreSpectrum phi = kernel_spectrum(n, -s, delta, grid);
  const double lhs = ls_quadratic_form(phi, s);
  // phi^2 ((delta^2+|v|^2)^2 + 16|z|^2)^{-s} = ((delta^2+|v|^2)^2 + 16|z|^2)^{-(n+1)}.
  const double rhs = c2(n, 1, s) * std::pow(delta, 2.0 * s - 2.0 * (n + 1)) *
                     lemma_I(n, 1, 0.0, n + 1.0);
  auto p = params_of(n, s);
  p["delta"] = delta;
  return CheckReport::equality("hardy_equality", p, lhs, rhs, 1e-3, "f = phi_{-s,delta}");
}

HardyWeightTable hardy_weight_table(int n, double s, int panels, int points) {
  require_unit(s, "hardy_weight_table");
  HardyWeightTable table;
  table.n = n;
  table.s = s;
  const QuadratureRule rule = gauss_legendre(0.0, 0.5 * kPi, panels, points);
  table.angle = rule.nodes;
  table.weight = rule.weights;
  table.value.resize(rule.size());
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const double phi = rule.nodes[i];
    table.value[i] = weight_w(n, s, std::sqrt(std::cos(phi)), 0.25 * std::sin(phi));
  }
  return table;
}

CheckReport hardy_homogeneous(const BiRadialFunction& f, const LaguerreSpectrum& spectrum,
                              const HardyWeightTable& table, const QuadratureConfig& cfg) {
  const int n = table.n;
  const double s = table.s;
  if (spectrum.n != n) throw DomainError("hardy_homogeneous: spectrum and table differ in n");
  const double lhs = ls_quadratic_form(spectrum, s);
  const double scale = f.scale > 0.0 ? f.scale : 1.0;
  // x = (R sqrt(cos phi) omega, +-R^2 sin(phi)/4), dx = R^{2n+1} cos^{n-1}(phi)/4 dR dphi domega.
  double total = 0.0;
  for (std::size_t i = 0; i < table.angle.size(); ++i) {
    const double phi = table.angle[i];
    const double c = std::cos(phi), sn = std::sin(phi);
    auto g = [&](double R) {
      const double v = f(R * std::sqrt(c), 0.25 * R * R * sn);
      return v * v;
    };
    const double radial = log_radial(g, 2.0 * n + 2.0 - 2.0 * s, scale, cfg);
    total += table.weight[i] * std::pow(c, n - 1.0) * table.value[i] * radial;
  }
  const double rhs = c2(n, 1, s) * 0.5 * unit_sphere_area(2 * n) * total;
  auto p = params_of(n, s);
  p["angles"] = static_cast<double>(table.angle.size());
  return CheckReport::inequality("hardy_homogeneous", p, lhs, rhs, 1e-3, "weight w_s");
}

CheckReport isometry_sum(double a, double s, long k_terms, double tol) {
  if (!(a > 0.0) || !(s > 0.0)) throw DomainError("isometry_sum: requires a > 0 and s > 0");
  if (k_terms < 1) throw DomainError("isometry_sum: k_terms must be >= 1");
  // t_j = Gamma(a+j)/Gamma(a+1+s+j) by its ratio recurrence, summed smallest first.
  std::vector<double> t(k_terms);
  t[0] = std::exp(log_gamma_ratio(a, a + 1.0 + s));
  for (long j = 1; j < k_terms; ++j) t[j] = t[j - 1] * (a + j - 1.0) / (a + s + j);
  double sum = 0.0;
  for (long j = k_terms - 1; j >= 0; --j) sum += t[j];
  // Tail: t_j ~ C (a + j + s/2)^{-1-s}; integral plus Euler-Maclaurin corrections.
  const double x = a + static_cast<double>(k_terms) + 0.5 * s;
  const double t_next = t[k_terms - 1] * (a + k_terms - 1.0) / (a + s + k_terms);
  const double C = t_next * std::pow(x, 1.0 + s);
  const double tail = C * (std::pow(x, -s) / s + 0.5 * std::pow(x, -1.0 - s) +
                           (1.0 + s) / 12.0 * std::pow(x, -2.0 - s));
  const double lhs = sum + tail;
  const double rhs = std::exp(log_gamma(s) + log_gamma(a) - log_gamma(1.0 + s) - log_gamma(a + s));
  CheckReport r = CheckReport::equality("isometry_sum", {{"a", a}, {"s", s}}, lhs, rhs, tol);
  r.params["k_terms"] = static_cast<double>(k_terms);
  r.notes = "tail estimate " + std::to_string(tail);
  return r;
}

double fundamental_solution_constant(int n, double s) {
  const double g = gamma(0.5 * (n + 1 - s));
  return std::pow(kPi, n + 1) * gamma(s) / (std::pow(2.0, n + 1 - 3.0 * s) * g * g);
}

double isometry_constant(int n, double s) {
  const double g = gamma(0.5 * (n + 1 - s));
  return std::pow(kPi, 2 * n + 4) * gamma(s) * gamma(1.0 + s) /
         (std::pow(2.0, 2 * n - 2 - 6.0 * s) * g * g * g * g);
}

}  // namespace hext
