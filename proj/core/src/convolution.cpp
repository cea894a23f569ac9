// Copyright 2026 The hext Authors.
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy at
// http://www.apache.org/licenses/LICENSE-2.0

#include "hext/convolution.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

namespace hext {
namespace {

constexpr double kPi = std::numbers::pi;

int fewer_points(int p) {
  switch (p) {
    case 30: return 25;
    case 25: return 20;
    case 20: return 15;
    case 15: return 10;
    default: return 7;
  }
}

QuadratureRule panels(double a, double b, double width, int points) {
  int count = std::max(1, static_cast<int>(std::ceil((b - a) / width - 1e-9)));
  return gauss_legendre(a, b, count, points);
}

// Exponential tail beyond the last node, fitted from the two outermost nodes.
double exp_tail(double s1, double g1, double s2, double g2, double edge) {
  if (g1 == 0.0 || g2 == 0.0 || (g1 > 0) != (g2 > 0)) return 0.0;
  double k = std::log(g2 / g1) / std::abs(s2 - s1);
  // g decays away from the edge with rate k when k > 0.
  if (!(k > 0.05)) return 0.0;
  double g_edge = g1 * std::exp(-k * std::abs(edge - s1));
  return g_edge / k;
}

// int chi(y) A(x y^{-1}) B(y) dy with chi = |xy^-1|^8 / (|y|^8 + |xy^-1|^8).
double centred_piece(int n, const BiRadialFunction& A, const BiRadialFunction& B, double r,
                     double t, const ConvolutionRule& rule) {
  const double xnorm = std::pow(r * r * r * r + 16.0 * t * t, 0.25);
  double L = B.scale;
  double kappa = 1.0;
  if (!(L > 0.0)) {
    L = 1.0;
    kappa = 0.0;
  }
  const double rs = r / L, ts = t / (L * L);
  const double xs = xnorm / L;
  const double L2 = L * L;
  const int Q = 2 * n + 2;

  const double lo = std::log(std::min(1.0, xs > 0.0 ? xs : 1.0)) - rule.sigma_below;
  const double hi = std::log(std::max(1.0, xs)) + rule.sigma_above;
  QuadratureRule sig = panels(lo, hi, rule.sigma_panel, rule.sigma_points);
  QuadratureRule tau = panels(-rule.tau_max, rule.tau_max, rule.tau_panel, rule.tau_points);

  std::vector<double> cth(rule.theta_points), sth(rule.theta_points);
  for (int i = 0; i < rule.theta_points; ++i) {
    double th = 2.0 * kPi * i / rule.theta_points;
    cth[i] = std::cos(th);
    sth[i] = std::sin(th);
  }
  const double wth = 2.0 * kPi / rule.theta_points;

  // Remaining sphere S^{2n-3} around the (e1, Je1) plane.
  std::vector<double> cpsi{1.0}, wpsi{1.0};
  if (n >= 2) {
    QuadratureRule ps = gauss_legendre(0.0, 0.5 * kPi, 1, rule.psi_points == 7 ? 7 : 10);
    if (rule.psi_points >= 15) ps = gauss_legendre(0.0, 0.5 * kPi, 1, 15);
    cpsi.clear();
    wpsi.clear();
    const double area = unit_sphere_area(2 * n - 2);
    for (std::size_t i = 0; i < ps.size(); ++i) {
      double c = std::cos(ps.nodes[i]), s = std::sin(ps.nodes[i]);
      cpsi.push_back(c);
      wpsi.push_back(ps.weights[i] * area * c * std::pow(s, 2 * n - 3));
    }
  }

  std::vector<double> sh(tau.size()), chw(tau.size());
  for (std::size_t k = 0; k < tau.size(); ++k) {
    sh[k] = std::sinh(tau.nodes[k]);
    chw[k] = std::cosh(tau.nodes[k]) * tau.weights[k];
  }
  const double kappa_a = A.scale > 0.0 ? (A.scale / L) * (A.scale / L) : 0.0;

  std::vector<double> g(sig.size());
  for (std::size_t i = 0; i < sig.size(); ++i) {
    const double R = std::exp(sig.nodes[i]);
    const double R2 = R * R;
    const double c = 0.25 * (kappa + R2);
    const double R4 = R2 * R2;
    double inner = 0.0;
    for (std::size_t p = 0; p < cpsi.size(); ++p) {
      const double P = R * cpsi[p];
      double ring = 0.0;
      for (int j = 0; j < rule.theta_points; ++j) {
        const double a = P * cth[j], b = P * sth[j];
        const double V2 = std::max(0.0, rs * rs - 2.0 * rs * a + R2);
        const double V4 = V2 * V2;
        const double vA = L * std::sqrt(V2);
        const double shift = ts - 0.5 * rs * b;
        const double ca = std::max(0.25 * (kappa_a + V2), 1e-12 * c);
        // The t-line carries a peak of B at 0 (width c) and one of A at
        // `shift` (width ca); squared Lorentzian weights split it between two maps.
        auto term = [&](double tp) {
          const double T = shift - tp;
          const double NA4 = V4 + 16.0 * T * T;
          const double NB4 = R4 + 16.0 * tp * tp;
          const double NA8 = NA4 * NA4;
          const double chi = NA8 / (NB4 * NB4 + NA8);
          if (chi == 0.0) return 0.0;
          const double bv = B(L * R, L2 * std::abs(tp));
          if (bv == 0.0) return 0.0;
          const double wb = c / (c * c + tp * tp);
          const double wa = ca / (ca * ca + T * T);
          return chi * bv * A(vA, L2 * std::abs(T)) * (wb * wb) / (wa * wa + wb * wb);
        };
        auto term_a = [&](double tp) {
          const double T = shift - tp;
          const double NA4 = V4 + 16.0 * T * T;
          const double NB4 = R4 + 16.0 * tp * tp;
          const double NA8 = NA4 * NA4;
          const double chi = NA8 / (NB4 * NB4 + NA8);
          if (chi == 0.0) return 0.0;
          const double bv = B(L * R, L2 * std::abs(tp));
          if (bv == 0.0) return 0.0;
          const double wb = c / (c * c + tp * tp);
          const double wa = ca / (ca * ca + T * T);
          return chi * bv * A(vA, L2 * std::abs(T)) * (wa * wa) / (wa * wa + wb * wb);
        };
        double line = 0.0;
        for (std::size_t k = 0; k < sh.size(); ++k) {
          line += chw[k] * (c * term(c * sh[k]) + ca * term_a(shift + ca * sh[k]));
        }
        ring += line;
      }
      inner += wpsi[p] * wth * ring;
    }
    g[i] = std::pow(R, 2 * n) * inner;
  }

  double total = 0.0;
  for (std::size_t i = 0; i < sig.size(); ++i) total += sig.weights[i] * g[i];
  const std::size_t N = sig.size();
  if (N >= 2) {
    total += exp_tail(sig.nodes[0], g[0], sig.nodes[1], g[1], lo);
    total += exp_tail(sig.nodes[N - 1], g[N - 1], sig.nodes[N - 2], g[N - 2], hi);
  }
  return std::pow(L, Q) * total;
}

}  // namespace

ConvolutionRule ConvolutionRule::for_tolerance(double rel_tol) {
  ConvolutionRule r;
  if (rel_tol >= 1e-3) {
    r.sigma_panel = 1.5;
    r.theta_points = 24;
    r.tau_panel = 0.7;
    r.psi_points = 7;
  } else if (rel_tol < 1e-7) {
    r.sigma_below = 12.0;
    r.sigma_above = 12.0;
    r.sigma_panel = 0.75;
    r.sigma_points = 15;
    r.theta_points = 48;
    r.tau_max = 16.0;
    r.tau_panel = 0.35;
    r.tau_points = 15;
    r.psi_points = 15;
  }
  return r;
}

ConvolutionRule ConvolutionRule::coarser() const {
  ConvolutionRule r = *this;
  r.sigma_panel = 1.25 * sigma_panel;
  r.tau_panel = 1.25 * tau_panel;
  r.psi_points = fewer_points(psi_points);
  r.theta_points = std::max(8, (3 * theta_points) / 4);
  return r;
}

double convolve_biradial(int n, const BiRadialFunction& f, const BiRadialFunction& h, double r,
                         double t, const ConvolutionRule& rule) {
  if (n < 1) throw DomainError("convolve_biradial: n must be >= 1");
  if (r < 0.0) throw DomainError("convolve_biradial: r must be >= 0");
  return centred_piece(n, f, h, r, t, rule) + centred_piece(n, h, f, r, t, rule);
}

QuadratureResult convolve_biradial_detailed(const GroupParams& g, const BiRadialFunction& f,
                                            const BiRadialFunction& h, const Point& x,
                                            const QuadratureConfig& cfg) {
  cfg.validate();
  if (g.m() != 1) {
    throw DomainError("convolve_biradial: only centre dimension m = 1 is supported");
  }
  if (x.v.size() != g.dim_v() || x.z.size() != 1) throw DomainError("convolve_biradial: point dimension mismatch");
  const double r = x.v.norm(), t = x.z(0);
  ConvolutionRule rule = ConvolutionRule::for_tolerance(cfg.rel_tol);
  double fine = convolve_biradial(g.n(), f, h, r, t, rule);
  double coarse = convolve_biradial(g.n(), f, h, r, t, rule.coarser());
  double err = std::abs(fine - coarse);
  if (!std::isfinite(fine) || err > std::max(cfg.abs_tol, cfg.rel_tol * std::abs(fine))) {
    throw AccuracyError("convolve_biradial: tolerance not reached", fine, err);
  }
  return {fine, err};
}

double convolve_biradial(const GroupParams& g, const BiRadialFunction& f,
                         const BiRadialFunction& h, const Point& x, const QuadratureConfig& cfg) {
  return convolve_biradial_detailed(g, f, h, x, cfg).value;
}

double integrate_biradial(int n, int m, const std::function<double(double, double)>& F,
                          const QuadratureConfig& cfg) {
  if (n < 1 || m < 1) throw DomainError("integrate_biradial: n and m must be >= 1");
  const double sphere = unit_sphere_area(2 * n) * unit_sphere_area(m);
  const double Q = 2.0 * (n + m);
  QuadratureConfig inner_cfg = cfg.with_rel_tol(0.1 * cfg.rel_tol);
  inner_cfg.abs_tol = 1e-280;
  auto radial = [&](double sigma) {
    const double R = std::exp(sigma);
    if (!std::isfinite(std::pow(R, Q))) return 0.0;
    auto angular = [&](double phi) {
      const double c = std::cos(phi), s = std::sin(phi);
      const double r = R * std::sqrt(std::max(c, 0.0));
      const double z = 0.25 * R * R * s;
      return F(r, z) * std::pow(c, n - 1) * std::pow(s, m - 1);
    };
    double val = integrate_1d(angular, 0.0, 0.5 * kPi, inner_cfg);
    return std::pow(R, Q) * val;
  };
  const double inf = std::numeric_limits<double>::infinity();
  QuadratureConfig outer = cfg;
  outer.abs_tol = 0.0;
  double total = integrate_1d(radial, -inf, inf, outer);
  return sphere * std::pow(4.0, -m) * total;
}

}  // namespace hext
