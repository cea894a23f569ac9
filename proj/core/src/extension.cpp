// Copyright 2026 The hext Authors.
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy at
// http://www.apache.org/licenses/LICENSE-2.0

#include "hext/extension.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "hext/convolution.hpp"
#include "hext/kernels.hpp"

namespace hext {
namespace {

constexpr double kPi = std::numbers::pi;

void require_heisenberg(const GroupParams& g, const char* who) {
  if (g.m() != 1) throw DomainError(std::string(who) + ": only centre dimension m = 1 is supported");
}

}  // namespace

GaussianMixture GaussianMixture::single(double alpha, double beta, double amplitude) {
  GaussianMixture g;
  g.terms.push_back({amplitude, alpha, beta});
  g.validate();
  return g;
}

void GaussianMixture::validate() const {
  if (terms.empty()) throw DomainError("GaussianMixture: no terms");
  for (const auto& t : terms) {
    if (!(t.alpha > 0.0) || !(t.beta > 0.0) || !std::isfinite(t.amplitude)) {
      throw DomainError("GaussianMixture: need alpha > 0, beta > 0 and a finite amplitude");
    }
  }
}

double GaussianMixture::operator()(double r, double zeta) const {
  double v = 0.0;
  for (const auto& t : terms) v += t.amplitude * std::exp(-t.alpha * r * r - t.beta * zeta * zeta);
  return v;
}

BiRadialFunction GaussianMixture::function() const {
  double scale = 0.0;
  for (const auto& t : terms) {
    scale = std::max({scale, 1.0 / std::sqrt(t.alpha), 1.0 / std::pow(t.beta, 0.25)});
  }
  GaussianMixture copy = *this;
  return {[copy](double r, double zeta) { return copy(r, zeta); }, scale, "gaussian"};
}

LaguerreSpectrum GaussianMixture::spectrum(int n, const LambdaGrid& grid) const {
  validate();
  LaguerreSpectrum out;
  for (const auto& t : terms) {
    LaguerreSpectrum part = gaussian_spectrum(n, t.alpha, t.beta, grid);
    if (out.coeffs.empty()) {
      out = part;
      for (auto& c : out.coeffs) {
        for (double& v : c) v *= t.amplitude;
      }
      continue;
    }
    for (std::size_t i = 0; i < part.size(); ++i) {
      auto& c = out.coeffs[i];
      if (c.size() < part.coeffs[i].size()) c.resize(part.coeffs[i].size(), 0.0);
      for (std::size_t k = 0; k < part.coeffs[i].size(); ++k) c[k] += t.amplitude * part.coeffs[i][k];
    }
    out.tail_bound = std::max(out.tail_bound, part.tail_bound);
  }
  return out;
}

double GaussianMixture::centre_profile(double lambda, double r) const {
  double v = 0.0;
  for (const auto& t : terms) {
    v += t.amplitude * std::sqrt(kPi / t.beta) *
         std::exp(-lambda * lambda / (4.0 * t.beta) - t.alpha * r * r);
  }
  return v;
}

double GaussianMixture::heat_profile(int n, double t, double lambda, double r) const {
  lambda = std::abs(lambda);
  const double decay = std::exp(-2.0 * lambda * t);
  const double g = lambda > 0.0 ? -std::expm1(-2.0 * lambda * t) / lambda : 2.0 * t;
  double v = 0.0;
  for (const auto& term : terms) {
    // exp(-alpha r^2) = P^{-n} sum_k w^k phi_k with P = 2 alpha / lambda + 1/2,
    // w = 1 - 1/P, and the flow multiplies the k-th term by e^{-(2k+n) lambda t}.
    const double a = term.alpha;
    const double w = (4.0 * a - lambda) / (4.0 * a + lambda);
    const double W = w * decay;
    const double D = (2.0 * a + 0.5 * lambda) * g + decay;
    const double logv = 0.5 * std::log(kPi / term.beta) - lambda * lambda / (4.0 * term.beta) -
                        n * lambda * t - n * std::log(D) -
                        r * r * (1.0 + W) * (2.0 * a + 0.5 * lambda) / (4.0 * D);
    v += term.amplitude * std::exp(logv);
  }
  return v;
}

std::string route_name(Route route) {
  switch (route) {
    case Route::kConvolution: return "convolution";
    case Route::kSpectral: return "spectral";
    case Route::kHeatSemigroup: return "heat";
  }
  return "unknown";
}

Route parse_route(const std::string& name) {
  if (name == "convolution") return Route::kConvolution;
  if (name == "spectral") return Route::kSpectral;
  if (name == "heat" || name == "heat_semigroup") return Route::kHeatSemigroup;
  throw DomainError("unknown route: " + name);
}

SpectralExtension::SpectralExtension(LaguerreSpectrum f, double s, QuadratureConfig cfg)
    : f_(std::move(f)), s_(s), cfg_(cfg) {
  f_.validate();
  if (!(s > 0.0) || in_forbidden_set(f_.n, s)) {
    throw DomainError("SpectralExtension: requires s > 0 outside the forbidden set");
  }
}

std::shared_ptr<const LaguerreSpectrum> SpectralExtension::cached(double rho, int order) const {
  const auto key = std::make_pair(order, rho);
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  auto spec = std::make_shared<const LaguerreSpectrum>(extension_spectrum(f_, s_, rho, order, cfg_));
  std::lock_guard<std::mutex> lock(mutex_);
  if (cache_.size() >= 64) cache_.clear();
  cache_.emplace(key, spec);
  return spec;
}

LaguerreSpectrum SpectralExtension::spectrum_at(double rho, int order) const {
  if (!(rho > 0.0)) throw DomainError("SpectralExtension: rho must be > 0");
  return *cached(rho, order);
}

double SpectralExtension::value(double r, double t, double rho) const {
  if (rho == 0.0) return inverse_transform(f_, r, t);
  return scaled_derivative(0, r, t, rho);
}

double SpectralExtension::scaled_derivative(int order, double r, double t, double rho) const {
  if (!(rho > 0.0)) throw DomainError("SpectralExtension: rho must be > 0");
  return inverse_transform(*cached(rho, order), r, t);
}

double SpectralExtension::rho_derivative(double r, double t, double rho) const {
  return 2.0 * rho * scaled_derivative(1, r, t, rho);
}

double SpectralExtension::ls(double r, double t) const {
  std::shared_ptr<const LaguerreSpectrum> spec;
  {
    std::lock_guard<std::mutex> lock(mutex_);
    spec = ls_;
  }
  if (!spec) {
    spec = std::make_shared<const LaguerreSpectrum>(apply_Ls_spectral(f_, s_));
    std::lock_guard<std::mutex> lock(mutex_);
    ls_ = spec;
  }
  return inverse_transform(*spec, r, t);
}

ExtensionSolution::ExtensionSolution(int n, int m, double s, Route route, BiRadialFunction f,
                                     Evaluator value, Evaluator rho_derivative)
    : n_(n), m_(m), s_(s), route_(route), f_(std::move(f)), value_(std::move(value)),
      drho_(std::move(rho_derivative)) {
  if (!value_) throw DomainError("ExtensionSolution: missing evaluator");
}

double ExtensionSolution::operator()(double r, double zeta, double rho) const {
  if (rho < 0.0) throw DomainError("ExtensionSolution: rho must be >= 0");
  if (rho == 0.0) return f_(r, std::abs(zeta));
  return value_(r, std::abs(zeta), rho);
}

double ExtensionSolution::operator()(const Point& x, double rho) const {
  return (*this)(x.v.norm(), x.z.norm(), rho);
}

double ExtensionSolution::rho_derivative(double r, double zeta, double rho) const {
  if (!drho_) throw DomainError("ExtensionSolution: route " + route_name(route_) + " has no rho derivative");
  if (!(rho > 0.0)) throw DomainError("ExtensionSolution: rho must be > 0");
  return drho_(r, std::abs(zeta), rho);
}

ExtensionSolution solve_convolution(const GroupParams& g, const BiRadialFunction& f,
                                    const FractionalOrder& s, const QuadratureConfig& cfg) {
  require_heisenberg(g, "solve_convolution");
  cfg.validate();
  const int n = g.n();
  const double sv = s.value();
  if (!(sv > 0.0)) throw DomainError("solve_convolution: requires s > 0");
  auto convolve = [g, f, cfg](const BiRadialFunction& kernel, double r, double zeta) {
    Point x{Eigen::VectorXd::Zero(g.dim_v()), Eigen::VectorXd::Constant(1, zeta)};
    x.v(0) = r;
    return convolve_biradial(g, f, kernel, x, cfg);
  };
  auto value = [=](double r, double zeta, double rho) {
    BiRadialFunction k{[=](double a, double b) { return Phi(n, 1, sv, rho, a, b); }, rho, "Phi"};
    return convolve(k, r, zeta);
  };
  auto drho = [=](double r, double zeta, double rho) {
    BiRadialFunction k{[=](double a, double b) { return dPhi_drho(n, 1, sv, rho, a, b); }, rho,
                       "dPhi"};
    return convolve(k, r, zeta);
  };
  return ExtensionSolution(n, 1, sv, Route::kConvolution, f, value, drho);
}

ExtensionSolution solve_spectral(int n, const BiRadialFunction& f, const LaguerreSpectrum& spectrum,
                                 const FractionalOrder& s, const QuadratureConfig& cfg) {
  if (spectrum.n != n) throw DomainError("solve_spectral: spectrum belongs to another group");
  auto sp = std::make_shared<const SpectralExtension>(spectrum, s.value(), cfg);
  auto value = [sp](double r, double t, double rho) { return sp->value(r, t, rho); };
  auto drho = [sp](double r, double t, double rho) { return sp->rho_derivative(r, t, rho); };
  ExtensionSolution u(n, 1, s.value(), Route::kSpectral, f, value, drho);
  u.attach_spectral(sp);
  return u;
}

ExtensionSolution solve_spectral(int n, const GaussianMixture& f, const FractionalOrder& s,
                                 const LambdaGrid& grid, const QuadratureConfig& cfg) {
  return solve_spectral(n, f.function(), f.spectrum(n, grid), s, cfg);
}

ExtensionSolution solve_heat_semigroup(const GroupParams& g, const GaussianMixture& f,
                                       const FractionalOrder& s, const QuadratureConfig& cfg) {
  require_heisenberg(g, "solve_heat_semigroup");
  f.validate();
  cfg.validate();
  const int n = g.n();
  const double sv = s.value();
  if (!(sv > 0.0)) throw DomainError("solve_heat_semigroup: requires s > 0");
  double beta_min = std::numeric_limits<double>::infinity();
  for (const auto& t : f.terms) beta_min = std::min(beta_min, t.beta);
  const double front = 4.0 * std::pow(kPi, sv + 1.0) / gamma(sv) / kPi;
  auto value = [=](double r, double zeta, double rho) {
    const double inf = std::numeric_limits<double>::infinity();
    QuadratureConfig inner = cfg.with_rel_tol(0.1 * cfg.rel_tol);
    inner.abs_tol = 0.0;
    const double y0 = std::log(0.25 * rho * rho);
    // t-integral in y = log t for one centre frequency.
    auto flow = [&](double lambda) {
      auto integrand = [&](double y) {
        const double t = std::exp(y);
        if (t == 0.0 || !std::isfinite(t)) return 0.0;
        const double p = heat_p_profile(sv, t, rho, lambda);
        if (p == 0.0) return 0.0;
        return t * p * f.heat_profile(n, t, lambda, r);
      };
      return integrate_1d(integrand, y0 - 6.0, y0, inner) + integrate_1d(integrand, y0, inf, inner) +
             integrate_1d(integrand, -inf, y0 - 6.0, inner);
    };
    QuadratureConfig outer = cfg;
    outer.abs_tol = 0.0;
    outer.tail_cut = 2.0 * std::sqrt(beta_min);
    auto lam = [&](double lambda) { return std::cos(lambda * zeta) * flow(lambda); };
    return front * std::pow(rho, 2.0 * sv) * integrate_1d(lam, 0.0, inf, outer);
  };
  return ExtensionSolution(n, 1, sv, Route::kHeatSemigroup, f.function(), value);
}

double pde_residual(const ExtensionSolution& u, double r, double zeta, double rho, double h) {
  if (!(h > 0.0) || !(rho > h)) throw DomainError("pde_residual: need 0 < h < rho");
  if (r < 0.0 || zeta < 0.0) throw DomainError("pde_residual: r and zeta must be >= 0");
  const int n = u.n(), m = u.m();
  const double s = u.s();
  const double c = u(r, zeta, rho);
  const double h2 = h * h;
  // Radial Laplacian in dimension d of a function of |x|; at the origin it is d u''(0).
  auto radial_laplacian = [&](double x, int d, auto&& eval) {
    if (x < h) {
      if (x != 0.0) throw DomainError("pde_residual: radii must be 0 or >= h");
      return 2.0 * d * (eval(h) - c) / h2;
    }
    const double up = eval(x + h), dn = eval(x - h);
    return (up - 2.0 * c + dn) / h2 + (d - 1) / x * (up - dn) / (2.0 * h);
  };
  const double lap_v = radial_laplacian(r, 2 * n, [&](double a) { return u(a, zeta, rho); });
  const double lap_z = radial_laplacian(zeta, m, [&](double b) { return u(r, b, rho); });
  const double up = u(r, zeta, rho + h), dn = u(r, zeta, rho - h);
  const double u_rr = (up - 2.0 * c + dn) / h2;
  const double u_r = (up - dn) / (2.0 * h);
  return lap_v + 0.25 * (r * r + rho * rho) * lap_z + u_rr + (1.0 - 2.0 * s) / rho * u_r;
}

double pde_residual(const ExtensionSolution& u, const Point& x, double rho, double h) {
  return pde_residual(u, x.v.norm(), x.z.norm(), rho, h);
}

std::vector<double> default_rho_sequence(int count) {
  std::vector<double> out;
  for (int i = 0; i < count; ++i) out.push_back(0.2 * std::ldexp(1.0, -i));
  return out;
}

namespace {

double fit_constant(const std::vector<double>& rho, const std::vector<double>& values,
                    const std::vector<double>& exponents, std::size_t skip) {
  const Eigen::Index rows = static_cast<Eigen::Index>(rho.size() - (skip < rho.size() ? 1 : 0));
  const Eigen::Index cols = static_cast<Eigen::Index>(exponents.size() + 1);
  Eigen::MatrixXd A(rows, cols);
  Eigen::VectorXd b(rows);
  Eigen::Index row = 0;
  for (std::size_t i = 0; i < rho.size(); ++i) {
    if (i == skip) continue;
    A(row, 0) = 1.0;
    for (std::size_t j = 0; j < exponents.size(); ++j) {
      A(row, static_cast<Eigen::Index>(j + 1)) = std::pow(rho[i], exponents[j]);
    }
    b(row) = values[i];
    ++row;
  }
  return A.colPivHouseholderQr().solve(b)(0);
}

std::vector<double> distinct_exponents(std::vector<double> e) {
  std::sort(e.begin(), e.end());
  std::vector<double> out;
  for (double x : e) {
    if (!(x > 1e-9)) continue;
    if (out.empty() || x - out.back() > 1e-6) out.push_back(x);
  }
  return out;
}

Extrapolation extrapolate_samples(const std::vector<double>& rho,
                                  const std::function<double(double)>& sample,
                                  const std::vector<double>& exponents, const char* who) {
  if (rho.size() < exponents.size() + 2) {
    throw DomainError(std::string(who) + ": rho sequence too short for the model");
  }
  std::vector<double> values;
  for (double p : rho) {
    if (!(p > 0.0)) throw DomainError(std::string(who) + ": rho values must be > 0");
    values.push_back(sample(p));
  }
  Extrapolation e = extrapolate(rho, values, exponents);
  if (!std::isfinite(e.limit) || e.error > std::max(1e-12, 0.05 * std::abs(e.limit))) {
    throw AccuracyError(std::string(who) + ": extrapolation did not settle", e.limit, e.error);
  }
  return e;
}

}  // namespace

Extrapolation extrapolate(const std::vector<double>& rho, const std::vector<double>& values,
                          const std::vector<double>& exponents) {
  if (rho.size() != values.size()) throw DomainError("extrapolate: size mismatch");
  const std::vector<double> e = distinct_exponents(exponents);
  if (rho.size() < e.size() + 2) throw DomainError("extrapolate: not enough samples");
  std::size_t largest = 0;
  for (std::size_t i = 1; i < rho.size(); ++i) {
    if (rho[i] > rho[largest]) largest = i;
  }
  Extrapolation out;
  out.rho = rho;
  out.values = values;
  out.limit = fit_constant(rho, values, e, rho.size());
  out.error = std::abs(out.limit - fit_constant(rho, values, e, largest));
  return out;
}

Extrapolation dtn_limit(const ExtensionSolution& u, double r, double zeta,
                        const std::vector<double>& rho_seq) {
  const double s = u.s();
  if (!(s > 0.0 && s < 1.0)) throw DomainError("dtn_limit: requires 0 < s < 1");
  auto sample = [&](double rho) { return -std::pow(rho, 1.0 - 2.0 * s) * u.rho_derivative(r, zeta, rho); };
  return extrapolate_samples(rho_seq, sample, {2.0 - 2.0 * s, 2.0, 4.0 - 2.0 * s, 4.0}, "dtn_limit");
}

Extrapolation limit2(const ExtensionSolution& u, double r, double zeta,
                     const std::vector<double>& rho_seq) {
  const double s = u.s();
  if (!(s > 0.0 && s < 0.5)) throw DomainError("limit2: requires 0 < s < 1/2");
  const double f0 = u(r, zeta, 0.0);
  auto sample = [&](double rho) { return -std::pow(rho, -2.0 * s) * (u(r, zeta, rho) - f0); };
  return extrapolate_samples(rho_seq, sample, {2.0 - 2.0 * s, 2.0, 4.0 - 2.0 * s, 4.0}, "limit2");
}

Extrapolation higher_order_limit(const SpectralExtension& u, int ell, double r, double t,
                                 const std::vector<double>& rho_seq) {
  const double s = u.s();
  if (ell < 1 || !(s >= ell - 1.0 && s < ell)) {
    throw DomainError("higher_order_limit: requires l >= 1 and l - 1 <= s < l");
  }
  const double d = 2.0 * (ell - s);
  auto sample = [&](double rho) { return std::pow(rho, d) * u.scaled_derivative(ell, r, t, rho); };
  return extrapolate_samples(rho_seq, sample, {d, 2.0, d + 2.0, 4.0}, "higher_order_limit");
}

namespace {

struct SingularRule {
  double panel_near = 0.5;
  double panel_far = 1.5;
  int sigma_points = 10;
  int chi_panels = 2;
  int chi_points = 15;
  int theta_points = 48;
  int psi_points = 10;
};

// int (f(x) - (f(wx) + f(w^{-1}x)) / 2) |w|^{-Q-2s} dw in homogeneous polar
// coordinates w = (R cos(chi) omega, +-R^2 sin(phi) / 4), cos(phi) = cos(chi)^2.
double singular_integral(int n, const BiRadialFunction& f, double s, double r, double t,
                         const SingularRule& rule) {
  const double fx = f(r, t);
  const double scale = f.scale > 0.0 ? f.scale : 1.0;
  const double xnorm = std::pow(r * r * r * r + 16.0 * t * t, 0.25);
  const double lo = std::log(1e-4 * scale);
  const double mid = std::log(xnorm + 12.0 * scale);
  const double hi = mid + 20.0 / s;

  std::vector<double> breaks;
  for (double x = lo; x < mid; x += rule.panel_near) breaks.push_back(x);
  for (double x = mid; x < hi; x += rule.panel_far) breaks.push_back(x);
  breaks.push_back(hi);
  const QuadratureRule sig = gauss_legendre(breaks, rule.sigma_points);
  const QuadratureRule chi = gauss_legendre(0.0, 0.5 * kPi, rule.chi_panels, rule.chi_points);

  std::vector<double> cth(rule.theta_points), sth(rule.theta_points);
  for (int i = 0; i < rule.theta_points; ++i) {
    const double th = 2.0 * kPi * (i + 0.5) / rule.theta_points;
    cth[i] = std::cos(th);
    sth[i] = std::sin(th);
  }
  const double wth = 2.0 * kPi / rule.theta_points;
  std::vector<double> cpsi{1.0}, wpsi{1.0};
  if (n >= 2) {
    const QuadratureRule ps = gauss_legendre(0.0, 0.5 * kPi, 1, rule.psi_points);
    cpsi.clear();
    wpsi.clear();
    const double area = unit_sphere_area(2 * n - 2);
    for (std::size_t i = 0; i < ps.size(); ++i) {
      const double c = std::cos(ps.nodes[i]), sn = std::sin(ps.nodes[i]);
      cpsi.push_back(c);
      wpsi.push_back(ps.weights[i] * area * c * std::pow(sn, 2 * n - 3));
    }
  }

  std::vector<double> g(sig.size());
  for (std::size_t i = 0; i < sig.size(); ++i) {
    const double R = std::exp(sig.nodes[i]);
    double acc = 0.0;
    for (std::size_t a = 0; a < chi.size(); ++a) {
      const double cc = std::cos(chi.nodes[a]);
      const double cphi = cc * cc;
      const double sphi = std::sqrt(std::max(0.0, 1.0 - cphi * cphi));
      // dphi = 2 cos(chi) / sqrt(1 + cos(chi)^2) dchi, measure cos(phi)^{n-1} / 4.
      const double jac = 2.0 * cc / std::sqrt(1.0 + cphi) * std::pow(cphi, n - 1) / 4.0;
      const double tau = 0.25 * R * R * sphi;
      const double A = R * cc;
      double ang = 0.0;
      for (std::size_t p = 0; p < cpsi.size(); ++p) {
        const double P = A * cpsi[p];
        double ring = 0.0;
        for (int j = 0; j < rule.theta_points; ++j) {
          const double cross = 2.0 * r * P * cth[j];
          const double twist = 0.5 * r * P * sth[j];
          const double vp = std::sqrt(std::max(0.0, r * r + cross + A * A));
          const double vm = std::sqrt(std::max(0.0, r * r - cross + A * A));
          for (double sign : {1.0, -1.0}) {
            const double tp = t + sign * tau - twist;
            const double tm = t - sign * tau + twist;
            ring += fx - 0.5 * (f(vp, std::abs(tp)) + f(vm, std::abs(tm)));
          }
        }
        ang += wpsi[p] * wth * ring;
      }
      acc += chi.weights[a] * jac * ang;
    }
    g[i] = std::pow(R, -2.0 * s) * acc;
  }
  double total = 0.0;
  for (std::size_t i = 0; i < sig.size(); ++i) total += sig.weights[i] * g[i];
  // Below the first node the integrand is O(R^{2-2s}); beyond the last it is
  // f(x) R^{-2s} times the sphere measure.
  total += g.front() / (2.0 - 2.0 * s) * std::exp((2.0 - 2.0 * s) * (lo - sig.nodes.front()));
  total += g.back() / (2.0 * s) * std::exp(-2.0 * s * (hi - sig.nodes.back()));
  return total;
}

}  // namespace

double ls_singular_integral(int n, const BiRadialFunction& f, double s, double r, double t,
                            const QuadratureConfig& cfg) {
  if (n < 1) throw DomainError("ls_singular_integral: n must be >= 1");
  if (!(s > 0.0 && s < 0.5)) throw DomainError("ls_singular_integral: requires 0 < s < 1/2");
  if (r < 0.0) throw DomainError("ls_singular_integral: r must be >= 0");
  cfg.validate();
  SingularRule fine;
  SingularRule coarse{0.75, 2.0, 7, 2, 10, 32, 7};
  if (cfg.rel_tol < 1e-6) {
    fine = {0.35, 1.0, 15, 3, 15, 64, 15};
    coarse = SingularRule{};
  }
  const double a = singular_integral(n, f, s, r, t, fine);
  const double b = singular_integral(n, f, s, r, t, coarse);
  const double err = std::abs(a - b);
  const double c = singular_integral_constant(n, 1, s);
  if (!std::isfinite(a) || err > std::max(cfg.abs_tol, cfg.rel_tol * std::abs(a))) {
    throw AccuracyError("ls_singular_integral: tolerance not reached", c * a, c * err);
  }
  return c * a;
}

double ls_singular_integral(const GroupParams& g, const BiRadialFunction& f,
                            const FractionalOrder& s, const Point& x, const QuadratureConfig& cfg) {
  require_heisenberg(g, "ls_singular_integral");
  return ls_singular_integral(g.n(), f, s.value(), x.v.norm(), x.z(0), cfg);
}

}  // namespace hext
