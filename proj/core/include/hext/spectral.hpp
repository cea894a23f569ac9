// Copyright 2026 The hext Authors.
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <functional>
#include <iosfwd>
#include <vector>

#include "hext/group.hpp"
#include "hext/profile.hpp"
#include "hext/special_math.hpp"

namespace hext {

// Radial spectral calculus on the Heisenberg group H^n. A bi-radial f has
// coefficients
//   f^(lambda, k) = k!(n-1)!/(k+n-1)! int_{C^n} f^lambda(v) phi_k^lambda(v) dv
// where f^lambda is the Fourier transform in the centre variable and
//   phi_k^lambda(v) = L_k^{n-1}(lambda |v|^2 / 2) exp(-lambda |v|^2 / 4).
// With this normalization the heat kernel has coefficients exp(-(2k+n) lambda t),
// convolution multiplies coefficients, and
//   f(v, t) = 2 (2 pi)^{-n-1} int_0^inf cos(lambda t) lambda^n sum_k f^(lambda,k) phi_k^lambda(v) dlambda.

// L(a,b,c) = int_0^inf exp(-a(2x+1)) x^{b-1} (1+x)^{-c} dx, a, b > 0.
double l_function(double a, double b, double c, const QuadratureConfig& cfg = {});
double log_l_function(double a, double b, double c, const QuadratureConfig& cfg = {});

// kExact is the coefficient of phi_{s,rho} in the normalization above,
//   pi^{n+1} / (2^{n+2s+1} Gamma((n+1+s)/2)^2) lambda^s L(rho^2 lambda/4, b_k, b_k - s)
// with b_k = (2k+n+1+s)/2. kPrinted carries the prefactor (2 pi)^{n+1} in its
// place, which is larger by 4^{n+1+s}.
enum class CoefficientForm { kExact, kPrinted };
double kernel_coefficient(int n, int k, double lambda, double rho, double s,
                          CoefficientForm form = CoefficientForm::kExact,
                          const QuadratureConfig& cfg = {});
double log_kernel_coefficient(int n, int k, double lambda, double rho, double s,
                              CoefficientForm form = CoefficientForm::kExact,
                              const QuadratureConfig& cfg = {});

// (2 lambda)^s Gamma((2k+n+1+s)/2) / Gamma((2k+n+1-s)/2).
double ls_multiplier(int n, int k, double lambda, double s);
double heat_multiplier(int n, int k, double lambda, double t);

double laguerre_function(int n, int k, double lambda, double r);
// phi_0 .. phi_{count-1} at one radius.
std::vector<double> laguerre_functions(int n, double lambda, double r, int count);
// Plancherel density: ||f||_2^2 = int_0^inf sum_k plancherel_weight * |f^|^2 dlambda.
double plancherel_weight(int n, int k, double lambda);

// Radial quadrature used by the forward transform: r in [0, r_max] on panels
// of width `panel`, and the centre cosine transform by adaptive quadrature.
struct TransformOptions {
  double r_max = 0.0;  // 0 picks 40 * scale (40 for homogeneous inputs)
  double panel = 0.0;  // 0 picks a width from the Laguerre oscillation
  int points = 20;
  QuadratureConfig cfg{};
};
double laguerre_transform(int n, const BiRadialFunction& f, double lambda, int k,
                          const TransformOptions& opt = {});
std::vector<double> laguerre_transform_all(int n, const BiRadialFunction& f, double lambda,
                                           int count, const TransformOptions& opt = {});

// Quadrature nodes on (0, inf). Panels double from lambda_min up to 1, then
// have unit width up to lambda_max. The sliver [0, lambda_min] is folded into
// the first node.
struct LambdaGrid {
  std::vector<double> nodes;
  std::vector<double> weights;
};
LambdaGrid lambda_grid(double lambda_max, double lambda_min = 1.0 / 4096.0, int points = 10);

struct LaguerreSpectrum {
  int n = 1;
  std::vector<double> lambda;
  std::vector<double> weight;
  // coeffs[i][k]; the length may differ between nodes.
  std::vector<std::vector<double>> coeffs;
  // Bound on the relative size of the discarded k-tail.
  double tail_bound = 0.0;

  void validate() const;
  std::size_t size() const { return lambda.size(); }
  int k_max() const;
  // sum_i weight_i sum_k plancherel_weight |coeff|^2
  double norm2() const;

  // JSON header line followed by "lambda,weight,k,value" rows.
  void write(std::ostream& os) const;
  static LaguerreSpectrum read(std::istream& is);
};

// f = exp(-alpha |v|^2 - beta t^2), coefficients in closed form.
LaguerreSpectrum gaussian_spectrum(int n, double alpha, double beta, const LambdaGrid& grid,
                                   double eps = 1e-17, int k_cap = 4000000);
// Spectrum of phi_{s,rho}, |s| < n + 1, from the confluent recurrence.
LaguerreSpectrum kernel_spectrum(int n, double s, double rho, const LambdaGrid& grid,
                                 double eps = 1e-16, int k_cap = 400000);
// Numerical forward transform of an arbitrary bi-radial function.
LaguerreSpectrum transform_spectrum(int n, const BiRadialFunction& f, const LambdaGrid& grid,
                                    int count, const TransformOptions& opt = {});

using SpectralMultiplier = std::function<double(int k, double lambda)>;
LaguerreSpectrum apply_multiplier(const LaguerreSpectrum& f, const SpectralMultiplier& m);
LaguerreSpectrum apply_Ls_spectral(const LaguerreSpectrum& f, double s);

double inverse_transform(const LaguerreSpectrum& F, double r, double t);
double inverse_transform(const LaguerreSpectrum& F, const Point& x);
// Plancherel pairing (f, g).
double spectral_inner(const LaguerreSpectrum& f, const LaguerreSpectrum& g);

// w_k(z) = Gamma(b_k) U(b_k, 1+s, z), b_k = (2k+n+1+s)/2, for k < count.
// Forward recurrence when count * z is small, Miller's backward recurrence
// otherwise; w_0 is fixed by quadrature.
std::vector<double> confluent_sequence(int n, double s, double z, int count,
                                       const QuadratureConfig& cfg = {});

// Multipliers of the extension u = C1 rho^{2s} f * phi_{s,rho}:
//   m_k = z^s exp(-z/2) w_k(z) / Gamma(s), z = rho^2 lambda / 2,
// or ((2 rho)^{-1} d/drho)^order m_k when order > 0.
std::vector<double> extension_multipliers(int n, double s, double lambda, double rho, int count,
                                          int order = 0, const QuadratureConfig& cfg = {});
// Applies the extension multipliers at one rho.
LaguerreSpectrum extension_spectrum(const LaguerreSpectrum& f, double s, double rho,
                                    int order = 0, const QuadratureConfig& cfg = {});

}  // namespace hext
