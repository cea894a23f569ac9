// Copyright 2026 The hext Authors.
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <string>

#include "hext/constants.hpp"
#include "hext/convolution.hpp"
#include "hext/group.hpp"
#include "hext/profile.hpp"
#include "hext/special_math.hpp"

namespace hext {

// Kernels are functions of r = |v| and zeta = |z|.
double phi(int n, int m, double s, double rho, double r, double zeta);
// C1 rho^{2s} phi_{s,rho}; unit mass.
double Phi(int n, int m, double s, double rho, double r, double zeta);
// d/drho of Phi_{s,rho}.
double dPhi_drho(int n, int m, double s, double rho, double r, double zeta);
// -rho^{1-2s} d/drho phi_{-s,rho}.
double K_kernel(int n, int m, double s, double rho, double r, double zeta);
double poisson_kernel(int n, int m, double s, double rho, double r, double zeta);
double g_kernel(int j, double rho, double r, double zeta);
// c(l,j) g_{j,rho} rho^{2(l-s)} phi_{l-s,rho}.
double h_kernel(int j, int n, int m, double s, double rho, const CoeffTable& table, double r,
                double zeta);
// |(v,z)|^{-p}
double homogeneous_power(double p, double r, double zeta);

// Heat kernel of the sublaplacian by Hankel inversion of its z-Fourier profile
// (4 pi)^{-n} (lambda / sinh t lambda)^n exp(-lambda coth(t lambda) |v|^2 / 4).
double heat_q(int n, int m, double t, double r, double zeta, const QuadratureConfig& cfg = {});
double heat_q_profile(int n, double t, double r, double lambda);
// The companion kernel p_{t,s}(rho, z).
double heat_p(int m, double s, double t, double rho, double zeta, const QuadratureConfig& cfg = {});
double heat_p_profile(double s, double t, double rho, double lambda);

// int_0^inf int_R e^{-i lambda w} (lambda / sinh t lambda)^{n+s+1}
//     exp(-lambda coth(t lambda) (1+|v|^2) / 4) dlambda dt.
double oscillatory_Phi_integral(int n, double s, double v_norm, double w,
                                const QuadratureConfig& cfg = {});

// psi_s = C1 (phi_s * |.|^{-Q+2s}) with phi_s = |.|^{-(n+m+s)}, and the
// homogeneous Hardy weight w_s = phi_s / psi_s. Heisenberg groups only.
double psi_s(int n, double s, double r, double t, const ConvolutionRule& rule = {});
double weight_w(int n, double s, double r, double t, const ConvolutionRule& rule = {});
double weight_w(const GroupParams& g, const FractionalOrder& s, const Point& x,
                const QuadratureConfig& cfg = {});

enum class KernelKind { kPhi, kPhiNormalized, kK, kPoisson, kHeatQ, kHeatP, kWeight, kG, kH };
KernelKind parse_kernel_kind(const std::string& name);
std::string kernel_kind_name(KernelKind kind);

struct KernelSpec {
  KernelKind kind = KernelKind::kPhi;
  int n = 1;
  int m = 1;
  double s = 0.5;
  // rho for the Poisson-type kernels, t for the heat kernels.
  double scale = 1.0;
  int j = 0;
  int ell = 1;

  void validate() const;
};

double evaluate(const KernelSpec& spec, double r, double zeta, const QuadratureConfig& cfg = {});
double evaluate(const KernelSpec& spec, const Point& x, const QuadratureConfig& cfg = {});
// Closed-form kernels as BiRadialFunction, with their core scale attached.
BiRadialFunction kernel_function(const KernelSpec& spec);

}  // namespace hext
