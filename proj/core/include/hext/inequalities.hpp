// Copyright 2026 The hext Authors.
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <array>
#include <functional>
#include <vector>

#include "hext/profile.hpp"
#include "hext/report.hpp"
#include "hext/spectral.hpp"

namespace hext {

// Energy of the extension u of f on H^n,
//   int_0^inf int |grad u|^2 rho^{1-2s} dv dt drho,
//   |grad u|^2 = |grad_H u|^2 + rho^2/4 |d_t u|^2 + |d_rho u|^2.
// Per Laguerre mode it equals lambda^s e_k |f^|^2, with
//   e_k = 2^{1-2s} int_0^inf a^{-s} ((2k+n+a) m_k(a)^2 + a m_k'(a)^2) da
// and m_k the extension multiplier at z = 2a.
std::vector<double> energy_coefficients(int n, double s, int count, const QuadratureConfig& cfg = {});
double energy(const LaguerreSpectrum& f, double s, const QuadratureConfig& cfg = {});
// (L_s f, f) by Plancherel.
double ls_quadratic_form(const LaguerreSpectrum& f, double s);
// energy(f) against dtn_constant(s) (f, L_s f).
CheckReport energy_identity(const LaguerreSpectrum& f, double s, double tol = 1e-2,
                            const QuadratureConfig& cfg = {});

// A closed-form bi-radial function of (r, t, rho) with its gradient
// (d_r u, d_t u, d_rho u).
struct ExtensionField {
  std::function<double(double r, double t, double rho)> value;
  std::function<std::array<double, 3>(double r, double t, double rho)> gradient;
  double scale = 1.0;
};
// The energy integral by nested quadrature, rho = e^u.
double energy_direct(int n, const ExtensionField& u, double s, const QuadratureConfig& cfg = {});

// L_s phi / phi for phi = phi_{-s,delta}: c2 delta^{2s} ((delta^2+r^2)^2 + 16 t^2)^{-s}.
double hardy_weight(int n, double s, double delta, double r, double t);
// dtn_constant(s) int u(., 0)^2 hardy_weight.
double trace_hardy_rhs(int n, const BiRadialFunction& trace, double s, double delta,
                       const QuadratureConfig& cfg = {});
// Energy minus trace term; lhs = energy, rhs = trace term.
CheckReport trace_hardy_gap(const BiRadialFunction& f, const LaguerreSpectrum& spectrum, double s,
                            double delta, const QuadratureConfig& cfg = {});
CheckReport trace_hardy_gap(int n, const ExtensionField& u, double s, double delta,
                            const QuadratureConfig& cfg = {});

// (L_s f, f) >= c2 delta^{2s} int f^2 ((delta^2+|v|^2)^2 + 16|z|^2)^{-s}.
CheckReport hardy_nonhomogeneous(const BiRadialFunction& f, const LaguerreSpectrum& spectrum,
                                 double s, double delta, const QuadratureConfig& cfg = {});
// The same at f = phi_{-s,delta}, with the right side in closed form.
CheckReport hardy_nonhomogeneous_extremal(int n, double s, double delta,
                                          const LambdaGrid& grid);

// w_s restricted to the unit sphere of the homogeneous norm, sampled at
// Gauss nodes in the polar angle; w_s(x) = |x|^{-2s} W(angle).
struct HardyWeightTable {
  int n = 1;
  double s = 0.5;
  std::vector<double> angle;
  std::vector<double> weight;
  std::vector<double> value;
};
HardyWeightTable hardy_weight_table(int n, double s, int panels = 2, int points = 10);
// (L_s f, f) >= c2 int f^2 w_s.
CheckReport hardy_homogeneous(const BiRadialFunction& f, const LaguerreSpectrum& spectrum,
                              const HardyWeightTable& table, const QuadratureConfig& cfg = {});

// sum_j Gamma(a+j) / Gamma(a+1+s+j) against Gamma(s) Gamma(a) / (Gamma(1+s) Gamma(a+s)).
CheckReport isometry_sum(double a, double s, long k_terms = 1000000, double tol = 1e-8);
// C_{n,s} with C_{n,s}^{-1} |g|^{-2(n+1)+2s} the fundamental solution of L_s on H^n.
double fundamental_solution_constant(int n, double s);
// Constant in ||P_s f||^2_{H^{s+1}(H^{n+1})} = C ||f||^2_{H^s(H^n)}; evaluated, not verified.
double isometry_constant(int n, double s);

}  // namespace hext
