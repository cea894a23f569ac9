// Copyright 2026 The hext Authors.
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy at
// http://www.apache.org/licenses/LICENSE-2.0

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "hext/extension.hpp"
#include "hext/spectral.hpp"

namespace hext {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(Spectral, SublaplacianEigenvalues) {
  // s = 1 recovers lambda (2k + n).
  for (int n : {1, 2}) {
    for (int k : {0, 3, 10}) {
      EXPECT_NEAR(ls_multiplier(n, k, 0.7, 1.0), 0.7 * (2 * k + n), 1e-12 * (2 * k + n));
    }
  }
}

TEST(Spectral, HeatMultiplierSemigroup) {
  EXPECT_NEAR(heat_multiplier(1, 4, 0.3, 0.2) * heat_multiplier(1, 4, 0.3, 0.5),
              heat_multiplier(1, 4, 0.3, 0.7), 1e-15);
}

TEST(Spectral, LaguerreFunctions) {
  const double lambda = 1.3, r = 0.8;
  EXPECT_NEAR(laguerre_function(2, 0, lambda, r), std::exp(-lambda * r * r / 4.0), 1e-15);
  const std::vector<double> all = laguerre_functions(2, lambda, r, 6);
  for (int k = 0; k < 6; ++k) EXPECT_NEAR(all[k], laguerre_function(2, k, lambda, r), 1e-13);
}

TEST(Spectral, GaussianPlancherel) {
  const double alpha = 1.0, beta = 0.5;
  for (int n : {1, 2}) {
    const LaguerreSpectrum f = gaussian_spectrum(n, alpha, beta, lambda_grid(60.0));
    const double ref = std::pow(kPi / (2.0 * alpha), n) * std::sqrt(kPi / (2.0 * beta));
    EXPECT_NEAR(f.norm2(), ref, 1e-8 * ref) << "n=" << n;
  }
}

TEST(Spectral, GaussianInversion) {
  const LaguerreSpectrum f = gaussian_spectrum(1, 1.0, 1.0, lambda_grid(60.0));
  for (auto [r, t] : {std::pair{0.0, 0.0}, std::pair{0.5, 0.3}, std::pair{1.2, 0.9}}) {
    const double ref = std::exp(-r * r - t * t);
    EXPECT_NEAR(inverse_transform(f, r, t), ref, 1e-8);
  }
}

TEST(Spectral, NumericalTransformMatchesClosedForm) {
  const LambdaGrid grid{{0.5, 2.0}, {1.0, 1.0}};
  const LaguerreSpectrum exact = gaussian_spectrum(1, 1.0, 1.0, grid);
  const LaguerreSpectrum numeric =
      transform_spectrum(1, GaussianMixture::single(1.0, 1.0).function(), grid, 8);
  for (std::size_t i = 0; i < grid.nodes.size(); ++i) {
    for (int k = 0; k < 8; ++k) {
      EXPECT_NEAR(numeric.coeffs[i][k], exact.coeffs[i][k], 1e-8 * std::abs(exact.coeffs[i][0]));
    }
  }
}

TEST(Spectral, ConfluentSequenceAgainstIntegral) {
  // Gamma(b) U(b, 1+s, z) = int_0^inf e^{-z x} x^{b-1} (1+x)^{s-b} dx.
  const int n = 1;
  const double s = 0.5;
  for (double z : {0.05, 1.0, 12.0}) {
    const std::vector<double> w = confluent_sequence(n, s, z, 5);
    for (int k = 0; k < 5; ++k) {
      const double b = 0.5 * (2 * k + n + 1 + s);
      const double ref = integrate_1d(
          [=](double x) { return std::exp(-z * x) * std::pow(x, b - 1.0) * std::pow(1.0 + x, s - b); },
          0.0, std::numeric_limits<double>::infinity(), QuadratureConfig{}.with_rel_tol(1e-12));
      EXPECT_NEAR(w[k], ref, 1e-9 * ref) << "z=" << z << " k=" << k;
    }
  }
}

TEST(Spectral, PrintedCoefficientFactor) {
  for (double s : {0.3, 0.5}) {
    const double exact = kernel_coefficient(1, 2, 0.8, 1.0, s);
    const double printed = kernel_coefficient(1, 2, 0.8, 1.0, s, CoefficientForm::kPrinted);
    EXPECT_NEAR(printed / exact, std::pow(4.0, 2.0 + s), 1e-10 * std::pow(4.0, 2.0 + s));
  }
}

TEST(Spectral, ExtensionMultipliersStartAtOne) {
  const std::vector<double> m = extension_multipliers(1, 0.5, 2.0, 1e-6, 4);
  for (double v : m) EXPECT_NEAR(v, 1.0, 1e-5);
  const std::vector<double> far = extension_multipliers(1, 0.5, 2.0, 5.0, 4);
  for (double v : far) EXPECT_LT(v, 1e-3);
}

TEST(Spectral, SpectrumRoundTrip) {
  const LaguerreSpectrum f = gaussian_spectrum(1, 1.0, 1.0, lambda_grid(4.0));
  std::stringstream ss;
  f.write(ss);
  const LaguerreSpectrum g = LaguerreSpectrum::read(ss);
  ASSERT_EQ(g.size(), f.size());
  EXPECT_EQ(g.k_max(), f.k_max());
  EXPECT_NEAR(g.norm2(), f.norm2(), 1e-14 * f.norm2());
}

TEST(Spectral, InnerProductIsSymmetric) {
  const LambdaGrid grid = lambda_grid(30.0);
  const LaguerreSpectrum f = gaussian_spectrum(1, 1.0, 1.0, grid);
  const LaguerreSpectrum g = gaussian_spectrum(1, 0.5, 2.0, grid);
  EXPECT_NEAR(spectral_inner(f, g), spectral_inner(g, f), 1e-15);
  EXPECT_NEAR(spectral_inner(f, f), f.norm2(), 1e-14);
}

TEST(Spectral, LambdaGridIntegratesPowers) {
  const LambdaGrid grid = lambda_grid(40.0);
  double sum = 0.0;
  for (std::size_t i = 0; i < grid.nodes.size(); ++i) sum += grid.weights[i] * std::exp(-grid.nodes[i]);
  // The folded sliver [0, lambda_min] costs O(lambda_min^2).
  EXPECT_NEAR(sum, 1.0, 1e-7);
}

}  // namespace
}  // namespace hext
