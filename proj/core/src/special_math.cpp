// Copyright 2026 The hext Authors.
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy at
// http://www.apache.org/licenses/LICENSE-2.0

#include "hext/special_math.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>

namespace hext {
namespace {

constexpr double kPi = std::numbers::pi;

bool is_pole(double x) { return x <= 0.0 && x == std::floor(x); }

struct Panel {
  double a, b, value, error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

Panel gk21(const RealFunction& f, double a, double b) {
  double err = 0.0;
  double v = boost::math::quadrature::gauss_kronrod<double, 21>::integrate(
      f, a, b, 0, 0.0, &err);
  // Boost reports the error on the reference interval [-1, 1].
  return {a, b, v, err * 0.5 * (b - a)};
}

QuadratureResult adaptive_finite(const RealFunction& f, double a, double b,
                                 const QuadratureConfig& cfg) {
  std::priority_queue<Panel> heap;
  Panel first = gk21(f, a, b);
  double total = first.value, err = first.error;
  heap.push(first);
  int subdivisions = 1;
  while (err > std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total))) {
    if (subdivisions >= cfg.max_subdivisions) {
      throw AccuracyError("integrate_1d: subdivision limit reached", total, err);
    }
    Panel p = heap.top();
    heap.pop();
    double mid = 0.5 * (p.a + p.b);
    if (!(mid > p.a && mid < p.b)) {
      throw AccuracyError("integrate_1d: interval underflow", total, err);
    }
    Panel l = gk21(f, p.a, mid), r = gk21(f, mid, p.b);
    total += l.value + r.value - p.value;
    err += l.error + r.error - p.error;
    heap.push(l);
    heap.push(r);
    ++subdivisions;
    if (heap.size() > 1 && (subdivisions & 63) == 0) {
      // Re-accumulate to shed floating drift from the running sums.
      std::vector<Panel> all;
      double t = 0.0, e = 0.0;
      while (!heap.empty()) {
        all.push_back(heap.top());
        heap.pop();
      }
      for (const auto& q : all) {
        t += q.value;
        e += q.error;
        heap.push(q);
      }
      total = t;
      err = e;
    }
  }
  return {total, err};
}

QuadratureResult singular(const RealFunction& f, double a, double b,
                          const QuadratureConfig& cfg) {
  double err = 0.0, l1 = 0.0;
  double v = 0.0;
  if (std::isinf(b)) {
    boost::math::quadrature::exp_sinh<double> es;
    // exp_sinh needs the singular point at the finite end.
    v = es.integrate(f, a, b, cfg.rel_tol, &err, &l1);
  } else {
    boost::math::quadrature::tanh_sinh<double> ts;
    v = ts.integrate(f, a, b, cfg.rel_tol, &err, &l1);
  }
  if (!std::isfinite(v) || err > std::max(cfg.abs_tol, 10.0 * cfg.rel_tol * std::abs(v))) {
    throw AccuracyError("integrate_1d: double-exponential rule did not converge", v, err);
  }
  return {v, err};
}

}  // namespace

void QuadratureConfig::validate() const {
  if (!(rel_tol > 0.0)) throw DomainError("QuadratureConfig: rel_tol must be > 0");
  if (!(abs_tol >= 0.0)) throw DomainError("QuadratureConfig: abs_tol must be >= 0");
  if (max_subdivisions < 1) throw DomainError("QuadratureConfig: max_subdivisions must be >= 1");
  if (!(tail_cut > 0.0)) throw DomainError("QuadratureConfig: tail_cut must be > 0");
}

QuadratureResult integrate_1d_detailed(const RealFunction& f, double a, double b,
                                       const QuadratureConfig& cfg, Endpoints ends) {
  cfg.validate();
  if (a == b) return {0.0, 0.0};
  if (a > b) {
    QuadratureResult r = integrate_1d_detailed(f, b, a, cfg, ends);
    return {-r.value, r.error};
  }
  if (std::isinf(a) && std::isinf(b)) {
    QuadratureResult l = integrate_1d_detailed([&](double x) { return f(-x); }, 0.0,
                                               std::numeric_limits<double>::infinity(), cfg);
    QuadratureResult r = integrate_1d_detailed(f, 0.0, b, cfg);
    return {l.value + r.value, l.error + r.error};
  }
  if (std::isinf(a)) {
    QuadratureResult r = integrate_1d_detailed([&](double x) { return f(-x); }, -b,
                                               std::numeric_limits<double>::infinity(), cfg,
                                               ends == Endpoints::kSingularRight
                                                   ? Endpoints::kSingularLeft
                                                   : Endpoints::kSmooth);
    return r;
  }
  if (ends != Endpoints::kSmooth) return singular(f, a, b, cfg);
  if (std::isinf(b)) {
    const double L = cfg.tail_cut;
    auto g = [&](double t) {
      double one_minus = 1.0 - t;
      double x = a + L * t / one_minus;
      double v = f(x);
      return v == 0.0 ? 0.0 : v * L / (one_minus * one_minus);
    };
    return adaptive_finite(g, 0.0, 1.0, cfg);
  }
  return adaptive_finite(f, a, b, cfg);
}

double integrate_1d(const RealFunction& f, double a, double b, const QuadratureConfig& cfg,
                    Endpoints ends) {
  return integrate_1d_detailed(f, a, b, cfg, ends).value;
}

double gamma(double x) {
  if (is_pole(x)) throw DomainError("gamma: pole at nonpositive integer");
  return boost::math::tgamma(x);
}

double log_gamma(double x) {
  if (is_pole(x)) throw DomainError("log_gamma: pole at nonpositive integer");
  return boost::math::lgamma(x);
}

double log_gamma_ratio(double a, double b) {
  if (is_pole(a) || is_pole(b)) throw DomainError("gamma_ratio: pole argument");
  if (a > 0.0 && b > 0.0) return std::log(boost::math::tgamma_ratio(a, b));
  return boost::math::lgamma(a) - boost::math::lgamma(b);
}

double gamma_ratio(double a, double b) {
  if (is_pole(a) || is_pole(b)) throw DomainError("gamma_ratio: pole argument");
  if (a > 0.0 && b > 0.0) return boost::math::tgamma_ratio(a, b);
  int sa = 0, sb = 0;
  double la = boost::math::lgamma(a, &sa);
  double lb = boost::math::lgamma(b, &sb);
  return sa * sb * std::exp(la - lb);
}

double gauss_2f1_at_one(double a, double b, double c) {
  if (is_pole(c)) throw DomainError("gauss_2f1_at_one: c is a nonpositive integer");
  if (!(c - a - b > 0.0)) throw DomainError("gauss_2f1_at_one: requires c - a - b > 0");
  if (a == 0.0 || b == 0.0) return 1.0;
  // Gamma(c)Gamma(c-a-b)/(Gamma(c-a)Gamma(c-b)); a pole in the denominator
  // means the series terminates with value 0.
  if (is_pole(c - a) || is_pole(c - b)) return 0.0;
  return gamma_ratio(c, c - a) * gamma_ratio(c - a - b, c - b);
}

double gauss_2f1_series(double a, double b, double c, long terms) {
  if (is_pole(c)) throw DomainError("gauss_2f1_series: c is a nonpositive integer");
  double term = 1.0, sum = 0.0, comp = 0.0;
  for (long j = 0; j < terms; ++j) {
    // Kahan summation: the tail terms are tiny relative to the sum.
    double y = term - comp;
    double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    double jj = static_cast<double>(j);
    term *= (a + jj) * (b + jj) / ((c + jj) * (jj + 1.0));
    if (term == 0.0) break;
  }
  return sum;
}

double bessel_j(double nu, double x) {
  if (x < 0.0) throw DomainError("bessel_j: x must be >= 0");
  if (x == 0.0) return nu == 0.0 ? 1.0 : (nu > 0.0 ? 0.0 : std::numeric_limits<double>::infinity());
  return boost::math::cyl_bessel_j(nu, x);
}

double bessel_k(double nu, double x) {
  if (!(x > 0.0)) throw DomainError("bessel_k: x must be > 0");
  return boost::math::cyl_bessel_k(nu, x);
}

double laguerre(int k, double alpha, double x) {
  if (k < 0) throw DomainError("laguerre: negative degree");
  double l0 = 1.0;
  if (k == 0) return l0;
  double l1 = 1.0 + alpha - x;
  for (int j = 1; j < k; ++j) {
    double l2 = ((2.0 * j + 1.0 + alpha - x) * l1 - (j + alpha) * l0) / (j + 1.0);
    l0 = l1;
    l1 = l2;
  }
  return l1;
}

double unit_sphere_area(int d) {
  if (d < 1) throw DomainError("unit_sphere_area: dimension must be >= 1");
  return 2.0 * std::pow(kPi, 0.5 * d) / gamma(0.5 * d);
}

double hankel_transform(const RealFunction& f, int m, double r, const QuadratureConfig& cfg) {
  if (m < 1) throw DomainError("hankel_transform: m must be >= 1");
  if (r < 0.0) throw DomainError("hankel_transform: r must be >= 0");
  const double inf = std::numeric_limits<double>::infinity();
  const double pref = std::pow(2.0 * kPi, -m);
  if (r == 0.0) {
    return pref * unit_sphere_area(m) *
           integrate_1d([&](double p) { return f(p) * std::pow(p, m - 1); }, 0.0, inf, cfg);
  }
  const double nu = 0.5 * m - 1.0;
  auto integrand = [&](double p) {
    if (p == 0.0) return 0.0;
    // p^{m/2} J_nu(r p) written so the m = 1 case stays regular at 0.
    double kernel = (m == 1) ? std::sqrt(2.0 / (kPi * r)) * std::cos(r * p)
                             : std::pow(p, 0.5 * m) * boost::math::cyl_bessel_j(nu, r * p);
    return f(p) * kernel;
  };
  // Sum over half-period chunks until the contributions die out.
  const double chunk = kPi / r;
  double total = 0.0, start = 0.0;
  int quiet = 0;
  QuadratureConfig local = cfg;
  for (int i = 0; i < 100000 && quiet < 4; ++i) {
    double piece = integrate_1d(integrand, start, start + chunk, local);
    total += piece;
    start += chunk;
    quiet = (std::abs(piece) <= std::max(cfg.abs_tol, 1e-3 * cfg.rel_tol * std::abs(total))) ? quiet + 1 : 0;
  }
  return pref * std::pow(2.0 * kPi, 0.5 * m) * std::pow(r, 1.0 - 0.5 * m) * total;
}

double QuadratureRule::apply(const RealFunction& f) const {
  double s = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) s += weights[i] * f(nodes[i]);
  return s;
}

namespace {

template <unsigned N>
void append_panel(QuadratureRule& rule, double a, double b) {
  using G = boost::math::quadrature::gauss<double, N>;
  const auto& x = G::abscissa();
  const auto& w = G::weights();
  const double h = 0.5 * (b - a), c = 0.5 * (a + b);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0.0) {
      rule.nodes.push_back(c);
      rule.weights.push_back(h * w[i]);
    } else {
      rule.nodes.push_back(c - h * x[i]);
      rule.weights.push_back(h * w[i]);
      rule.nodes.push_back(c + h * x[i]);
      rule.weights.push_back(h * w[i]);
    }
  }
}

void append(QuadratureRule& rule, double a, double b, int points) {
  switch (points) {
    case 7: append_panel<7>(rule, a, b); break;
    case 10: append_panel<10>(rule, a, b); break;
    case 15: append_panel<15>(rule, a, b); break;
    case 20: append_panel<20>(rule, a, b); break;
    case 25: append_panel<25>(rule, a, b); break;
    case 30: append_panel<30>(rule, a, b); break;
    default: throw DomainError("gauss_legendre: points must be one of 7,10,15,20,25,30");
  }
}

}  // namespace

QuadratureRule gauss_legendre(double a, double b, int panels, int points) {
  if (panels < 1) throw DomainError("gauss_legendre: panels must be >= 1");
  QuadratureRule rule;
  const double h = (b - a) / panels;
  for (int i = 0; i < panels; ++i) append(rule, a + i * h, a + (i + 1) * h, points);
  return rule;
}

QuadratureRule gauss_legendre(const std::vector<double>& breaks, int points) {
  if (breaks.size() < 2) throw DomainError("gauss_legendre: need at least two break points");
  QuadratureRule rule;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) append(rule, breaks[i], breaks[i + 1], points);
  return rule;
}

}  // namespace hext
