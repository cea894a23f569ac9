// Copyright 2026 The hext Authors.
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hext {

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Thrown when a quadrature cannot reach its tolerance. Carries the best
// estimate and the error bound it achieved.
class AccuracyError : public std::runtime_error {
 public:
  AccuracyError(const std::string& what, double estimate, double error_bound)
      : std::runtime_error(what), estimate_(estimate), error_bound_(error_bound) {}
  double estimate() const { return estimate_; }
  double error_bound() const { return error_bound_; }

 private:
  double estimate_;
  double error_bound_;
};

struct QuadratureConfig {
  double rel_tol = 1e-9;
  double abs_tol = 1e-12;
  int max_subdivisions = 4096;
  // Length scale of the map x = a + tail_cut * t / (1 - t) used on [a, inf).
  double tail_cut = 1.0;

  void validate() const;
  QuadratureConfig with_rel_tol(double tol) const {
    QuadratureConfig c = *this;
    c.rel_tol = tol;
    return c;
  }
};

// Integrable endpoint singularities declared by the caller.
enum class Endpoints { kSmooth, kSingularLeft, kSingularRight, kSingularBoth };

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
};

using RealFunction = std::function<double(double)>;

// Adaptive Gauss-Kronrod (21 point) with global subdivision. Either limit may
// be infinite. Singular endpoints switch to double-exponential rules.
QuadratureResult integrate_1d_detailed(const RealFunction& f, double a, double b,
                                       const QuadratureConfig& cfg = {},
                                       Endpoints ends = Endpoints::kSmooth);
double integrate_1d(const RealFunction& f, double a, double b,
                    const QuadratureConfig& cfg = {},
                    Endpoints ends = Endpoints::kSmooth);

double gamma(double x);
// log|Gamma(x)|
double log_gamma(double x);
// Gamma(a)/Gamma(b) through log-gamma differences; sign handled.
double gamma_ratio(double a, double b);
double log_gamma_ratio(double a, double b);

// Gauss summation F(a,b;c;1) = Gamma(c)Gamma(c-a-b)/(Gamma(c-a)Gamma(c-b)).
double gauss_2f1_at_one(double a, double b, double c);
// Partial sum of sum_j (a)_j (b)_j / ((c)_j j!) with `terms` terms.
double gauss_2f1_series(double a, double b, double c, long terms);

double bessel_j(double nu, double x);
double bessel_k(double nu, double x);

// Generalized Laguerre polynomial L_k^alpha(x) by the three-term recurrence.
double laguerre(int k, double alpha, double x);

// (2 pi)^{-m} int_{R^m} f(|x|) e^{-i x.xi} dx at |xi| = r.
double hankel_transform(const RealFunction& f, int m, double r,
                        const QuadratureConfig& cfg = {});

// Surface area of the unit sphere in R^d.
double unit_sphere_area(int d);

// Composite Gauss-Legendre rule on [a, b] with `panels` equal panels.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  std::size_t size() const { return nodes.size(); }
  double apply(const RealFunction& f) const;
};
QuadratureRule gauss_legendre(double a, double b, int panels, int points = 10);
// Same, but panels are given by explicit break points.
QuadratureRule gauss_legendre(const std::vector<double>& breaks, int points = 10);

}  // namespace hext
