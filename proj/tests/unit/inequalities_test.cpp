// Copyright 2026 The hext Authors.
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy at
// http://www.apache.org/licenses/LICENSE-2.0

#include <gtest/gtest.h>

#include <cmath>

#include "hext/constants.hpp"
#include "hext/extension.hpp"
#include "hext/inequalities.hpp"

namespace hext {
namespace {

TEST(Inequalities, EnergyCoefficientsClosedForm) {
  // e_k = dtn_constant(s) 2^s Gamma((2k+n+1+s)/2) / Gamma((2k+n+1-s)/2).
  const int n = 1;
  for (double s : {0.3, 0.5, 0.7}) {
    const std::vector<double> e = energy_coefficients(n, s, 6);
    for (int k = 0; k < 6; ++k) {
      const double ref = dtn_constant(s) * std::pow(2.0, s) *
                         std::exp(std::lgamma(0.5 * (2 * k + n + 1 + s)) -
                                  std::lgamma(0.5 * (2 * k + n + 1 - s)));
      EXPECT_NEAR(e[k], ref, 1e-5 * ref) << "s=" << s << " k=" << k;
    }
  }
}

TEST(Inequalities, EnergyIdentityForGaussian) {
  const LaguerreSpectrum f = gaussian_spectrum(1, 1.0, 1.0, lambda_grid(30.0));
  const CheckReport r = energy_identity(f, 0.5);
  EXPECT_TRUE(r.pass) << r;
  EXPECT_GT(ls_quadratic_form(f, 0.5), 0.0);
}

TEST(Inequalities, HardyWeight) {
  const double s = 0.5, delta = 2.0;
  EXPECT_NEAR(hardy_weight(1, s, delta, 0.0, 0.0), c2(1, 1, s) * std::pow(delta, -2.0 * s), 1e-14);
  // Dilation: w_delta(x) = delta^{-2s} w_1(x / delta).
  EXPECT_NEAR(hardy_weight(1, s, delta, 0.8, 0.6),
              std::pow(delta, -2.0 * s) * hardy_weight(1, s, 1.0, 0.4, 0.15), 1e-14);
}

TEST(Inequalities, ExtremalCaseIsEquality) {
  for (double s : {0.3, 0.5}) {
    const CheckReport r = hardy_nonhomogeneous_extremal(1, s, 1.0, lambda_grid(60.0));
    EXPECT_TRUE(r.pass) << r;
  }
}

TEST(Inequalities, GaussianIsStrict) {
  const GaussianMixture g = GaussianMixture::single(1.0, 1.0);
  const CheckReport r =
      hardy_nonhomogeneous(g.function(), g.spectrum(1, lambda_grid(60.0)), 0.5, 1.0);
  EXPECT_TRUE(r.pass) << r;
  EXPECT_GT(r.lhs, r.rhs);
}

TEST(Inequalities, IsometrySum) {
  for (double a : {0.5, 3.0, 40.0}) {
    for (double s : {0.3, 1.5}) {
      const CheckReport r = isometry_sum(a, s);
      EXPECT_TRUE(r.pass) << r;
    }
  }
}

TEST(Inequalities, IsometryConstantsArePositive) {
  EXPECT_GT(fundamental_solution_constant(1, 0.5), 0.0);
  EXPECT_GT(isometry_constant(1, 0.5), 0.0);
}

}  // namespace
}  // namespace hext
