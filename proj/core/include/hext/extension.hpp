// Copyright 2026 The hext Authors.
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "hext/constants.hpp"
#include "hext/group.hpp"
#include "hext/profile.hpp"
#include "hext/spectral.hpp"

namespace hext {

// sum_i amplitude_i exp(-alpha_i |v|^2 - beta_i |z|^2). Closed-form spectrum
// and heat flow make these the reference initial data.
struct GaussianTerm {
  double amplitude = 1.0;
  double alpha = 1.0;
  double beta = 1.0;
};

struct GaussianMixture {
  std::vector<GaussianTerm> terms;

  static GaussianMixture single(double alpha = 1.0, double beta = 1.0, double amplitude = 1.0);
  void validate() const;
  double operator()(double r, double zeta) const;
  BiRadialFunction function() const;
  // Heisenberg groups only.
  LaguerreSpectrum spectrum(int n, const LambdaGrid& grid) const;
  // Centre-Fourier profile of e^{-t L} f at (lambda, r), by Mehler's formula.
  double heat_profile(int n, double t, double lambda, double r) const;
  // Same for f itself (t = 0).
  double centre_profile(double lambda, double r) const;
};

enum class Route { kConvolution, kSpectral, kHeatSemigroup };
std::string route_name(Route route);
Route parse_route(const std::string& name);

// Spectral form of the extension of a Laguerre spectrum. Spectra at each rho
// are cached, so evaluating many points at a few radii is cheap.
class SpectralExtension {
 public:
  SpectralExtension(LaguerreSpectrum f, double s, QuadratureConfig cfg = {});

  int n() const { return f_.n; }
  double s() const { return s_; }
  const LaguerreSpectrum& spectrum() const { return f_; }

  double value(double r, double t, double rho) const;
  // ((2 rho)^{-1} d/drho)^order u.
  double scaled_derivative(int order, double r, double t, double rho) const;
  double rho_derivative(double r, double t, double rho) const;
  // L_s f at (r, t).
  double ls(double r, double t) const;
  // Spectrum of u(., rho) (order 0) or of its scaled derivative.
  LaguerreSpectrum spectrum_at(double rho, int order = 0) const;

 private:
  std::shared_ptr<const LaguerreSpectrum> cached(double rho, int order) const;

  LaguerreSpectrum f_;
  double s_;
  QuadratureConfig cfg_;
  mutable std::shared_ptr<const LaguerreSpectrum> ls_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<int, double>, std::shared_ptr<const LaguerreSpectrum>> cache_;
};

class ExtensionSolution {
 public:
  using Evaluator = std::function<double(double r, double zeta, double rho)>;

  ExtensionSolution(int n, int m, double s, Route route, BiRadialFunction f, Evaluator value,
                    Evaluator rho_derivative = {});

  int n() const { return n_; }
  int m() const { return m_; }
  double s() const { return s_; }
  Route route() const { return route_; }
  const BiRadialFunction& initial() const { return f_; }

  // rho = 0 returns the initial datum.
  double operator()(double r, double zeta, double rho) const;
  double operator()(const Point& x, double rho) const;
  bool has_rho_derivative() const { return static_cast<bool>(drho_); }
  double rho_derivative(double r, double zeta, double rho) const;

  // Present for the spectral route.
  std::shared_ptr<const SpectralExtension> spectral() const { return spectral_; }
  void attach_spectral(std::shared_ptr<const SpectralExtension> sp) { spectral_ = std::move(sp); }

 private:
  int n_, m_;
  double s_;
  Route route_;
  BiRadialFunction f_;
  Evaluator value_, drho_;
  std::shared_ptr<const SpectralExtension> spectral_;
};

// u = f * Phi_{s,rho} by numerical group convolution (m = 1).
ExtensionSolution solve_convolution(const GroupParams& g, const BiRadialFunction& f,
                                    const FractionalOrder& s, const QuadratureConfig& cfg = {});
// u^(lambda, k) = f^(lambda, k) m_k(rho^2 lambda / 2) (Heisenberg groups).
ExtensionSolution solve_spectral(int n, const BiRadialFunction& f, const LaguerreSpectrum& spectrum,
                                 const FractionalOrder& s, const QuadratureConfig& cfg = {});
ExtensionSolution solve_spectral(int n, const GaussianMixture& f, const FractionalOrder& s,
                                 const LambdaGrid& grid, const QuadratureConfig& cfg = {});
// u = 4 pi^{s+1} / Gamma(s) rho^{2s} int_0^inf int p_{t,s}(rho, w) e^{-tL} f(v, z - w) dw dt,
// with the heat flow of a Gaussian mixture in closed form (m = 1).
ExtensionSolution solve_heat_semigroup(const GroupParams& g, const GaussianMixture& f,
                                       const FractionalOrder& s, const QuadratureConfig& cfg = {});

// (-L + d_rho^2 + (1-2s) rho^{-1} d_rho + rho^2/4 Delta_z) u by central
// differences with step h, using the bi-radial form of L.
double pde_residual(const ExtensionSolution& u, double r, double zeta, double rho, double h);
double pde_residual(const ExtensionSolution& u, const Point& x, double rho, double h);

// Least-squares fit of values(rho) = a + sum_j b_j rho^{exponents_j}; the
// error estimate compares the fit with and without the largest rho.
struct Extrapolation {
  double limit = 0.0;
  double error = 0.0;
  std::vector<double> rho;
  std::vector<double> values;
};
Extrapolation extrapolate(const std::vector<double>& rho, const std::vector<double>& values,
                          const std::vector<double>& exponents);
// 0.2 * 2^{-i}, i < count.
std::vector<double> default_rho_sequence(int count = 6);

// -lim rho^{1-2s} d_rho u; 0 < s < 1.
Extrapolation dtn_limit(const ExtensionSolution& u, double r, double zeta,
                        const std::vector<double>& rho_seq = default_rho_sequence());
// -lim rho^{-2s} (u - f); 0 < s < 1/2.
Extrapolation limit2(const ExtensionSolution& u, double r, double zeta,
                     const std::vector<double>& rho_seq = default_rho_sequence());
// lim rho^{2(l-s)} ((2 rho)^{-1} d_rho)^l u by spectral differentiation.
Extrapolation higher_order_limit(const SpectralExtension& u, int ell, double r, double t,
                                 const std::vector<double>& rho_seq = default_rho_sequence());

// singular_integral_constant * int (f(x) - f(y)) |x y^{-1}|^{-Q-2s} dy on H^n.
double ls_singular_integral(const GroupParams& g, const BiRadialFunction& f,
                            const FractionalOrder& s, const Point& x,
                            const QuadratureConfig& cfg = {});
double ls_singular_integral(int n, const BiRadialFunction& f, double s, double r, double t,
                            const QuadratureConfig& cfg = {});

}  // namespace hext
