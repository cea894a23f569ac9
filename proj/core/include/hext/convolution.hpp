// Copyright 2026 The hext Authors.
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include "hext/group.hpp"
#include "hext/profile.hpp"
#include "hext/special_math.hpp"

namespace hext {

// Node counts for the fixed tensor rule used by the bi-radial convolution.
// Radii are integrated in sigma = log R on Gauss-Legendre panels, the angle in
// the (e1, J e1) plane by the trapezoid rule, the remaining sphere angle (n >= 2)
// by Gauss-Legendre, and the centre variable through t = c sinh(tau).
struct ConvolutionRule {
  double sigma_below = 10.0;
  double sigma_above = 10.0;
  double sigma_panel = 1.0;
  int sigma_points = 10;
  int theta_points = 32;
  int psi_points = 10;
  double tau_max = 14.0;
  double tau_panel = 0.5;
  int tau_points = 10;

  // Rule sized for a target relative accuracy.
  static ConvolutionRule for_tolerance(double rel_tol);
  // Roughly four fifths of the nodes in every direction; used for error estimates.
  ConvolutionRule coarser() const;
};

// (f * h)(x) = int f(x y^{-1}) h(y) dy for bi-radial f and h on H^n (m = 1).
// The integrand is split with the partition of unity
//   chi(y) = |x y^{-1}|^8 / (|y|^8 + |x y^{-1}|^8),
// so that each piece is centred on the peak of one factor.
double convolve_biradial(int n, const BiRadialFunction& f, const BiRadialFunction& h, double r,
                         double t, const ConvolutionRule& rule);

// Same, at a group point, with an error estimate from a coarser rule. Throws
// AccuracyError when the estimate exceeds max(abs_tol, rel_tol |value|).
QuadratureResult convolve_biradial_detailed(const GroupParams& g, const BiRadialFunction& f,
                                            const BiRadialFunction& h, const Point& x,
                                            const QuadratureConfig& cfg = {});
double convolve_biradial(const GroupParams& g, const BiRadialFunction& f,
                         const BiRadialFunction& h, const Point& x,
                         const QuadratureConfig& cfg = {});

// int_N F(|v|, |z|) dv dz for an H-type group of dimensions (n, m), in
// homogeneous polar coordinates.
double integrate_biradial(int n, int m, const std::function<double(double, double)>& F,
                          const QuadratureConfig& cfg = {});

}  // namespace hext
