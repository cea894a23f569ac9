// Copyright 2026 The hext Authors.
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy at
// http://www.apache.org/licenses/LICENSE-2.0

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "hext/constants.hpp"
#include "hext/convolution.hpp"
#include "hext/kernels.hpp"

namespace hext {
namespace {

TEST(Kernels, PhiIsNormalizedPhi) {
  for (double s : {0.25, 0.5, 0.75}) {
    for (double rho : {0.5, 2.0}) {
      const double ref = c1(1, 1, s) * std::pow(rho, 2.0 * s) * phi(1, 1, s, rho, 0.4, 0.3);
      EXPECT_NEAR(Phi(1, 1, s, rho, 0.4, 0.3), ref, 1e-14 * ref);
    }
  }
}

TEST(Kernels, PhiHasUnitMass) {
  for (auto [n, m] : {std::pair{1, 1}, std::pair{2, 1}, std::pair{1, 2}}) {
    const double mass = integrate_biradial(
        n, m, [=](double r, double z) { return Phi(n, m, 0.5, 1.0, r, z); },
        QuadratureConfig{}.with_rel_tol(1e-9));
    EXPECT_NEAR(mass, 1.0, 1e-7) << "n=" << n << " m=" << m;
  }
}

TEST(Kernels, PhiDilation) {
  // Phi_{s,rho}(v, z) = rho^{-Q} Phi_{s,1}(v / rho, z / rho^2).
  const int n = 1, m = 1, Q = 2 * (n + m);
  for (double rho : {0.3, 1.7}) {
    const double lhs = Phi(n, m, 0.5, rho, 0.8, 0.6);
    const double rhs = std::pow(rho, -Q) * Phi(n, m, 0.5, 1.0, 0.8 / rho, 0.6 / (rho * rho));
    EXPECT_NEAR(lhs, rhs, 1e-13 * rhs);
  }
}

TEST(Kernels, RhoDerivativeMatchesDifferences) {
  const double rho = 0.7, h = 1e-5;
  for (double s : {0.3, 0.5}) {
    const double fd = (Phi(1, 1, s, rho + h, 0.5, 0.2) - Phi(1, 1, s, rho - h, 0.5, 0.2)) / (2 * h);
    EXPECT_NEAR(dPhi_drho(1, 1, s, rho, 0.5, 0.2), fd, 1e-7 * std::abs(fd));
  }
}

TEST(Kernels, HomogeneousPower) {
  EXPECT_NEAR(homogeneous_power(2.0, 3.0, 0.0), 1.0 / 9.0, 1e-15);
  // |(0, z)| = 2 |z|^{1/2}.
  EXPECT_NEAR(homogeneous_power(1.0, 0.0, 4.0), 0.25, 1e-15);
}

TEST(Kernels, HeatKernelHasUnitMass) {
  // The mass is the lambda -> 0 profile integrated over v.
  for (double t : {0.3, 2.0}) {
    const double mass = integrate_1d(
        [=](double r) { return 2.0 * std::numbers::pi * r * heat_q_profile(1, t, r, 1e-9); }, 0.0,
        std::numeric_limits<double>::infinity());
    EXPECT_NEAR(mass, 1.0, 1e-9);
  }
  EXPECT_GT(heat_q(1, 1, 0.5, 0.3, 0.2), 0.0);
}

TEST(Kernels, HeatKernelDilation) {
  // q_t(v, z) = t^{-Q/2} q_1(v / sqrt t, z / t).
  const double t = 0.25;
  const double lhs = heat_q(1, 1, t, 0.3, 0.1);
  const double rhs = std::pow(t, -2.0) * heat_q(1, 1, 1.0, 0.3 / std::sqrt(t), 0.1 / t);
  EXPECT_NEAR(lhs, rhs, 1e-6 * rhs);
}

TEST(Kernels, WeightIsHomogeneous) {
  const ConvolutionRule rule = ConvolutionRule::for_tolerance(1e-3);
  const double s = 0.5, r = 0.6, t = 0.2, a = 2.0;
  const double w1 = weight_w(1, s, r, t, rule);
  const double w2 = weight_w(1, s, a * r, a * a * t, rule);
  EXPECT_GT(w1, 0.0);
  EXPECT_NEAR(w2, std::pow(a, -2.0 * s) * w1, 1e-4 * w1);
}

TEST(Kernels, KindNamesRoundTrip) {
  for (KernelKind k : {KernelKind::kPhi, KernelKind::kPhiNormalized, KernelKind::kK,
                       KernelKind::kPoisson, KernelKind::kHeatQ, KernelKind::kHeatP,
                       KernelKind::kWeight, KernelKind::kG, KernelKind::kH}) {
    EXPECT_EQ(parse_kernel_kind(kernel_kind_name(k)), k);
  }
  EXPECT_THROW(parse_kernel_kind("nope"), DomainError);
}

TEST(Kernels, EvaluateDispatches) {
  KernelSpec spec;
  spec.kind = KernelKind::kPhiNormalized;
  spec.scale = 0.5;
  EXPECT_NEAR(evaluate(spec, 0.2, 0.1), Phi(1, 1, 0.5, 0.5, 0.2, 0.1), 1e-15);
  const BiRadialFunction f = kernel_function(spec);
  EXPECT_NEAR(f(0.2, 0.1), Phi(1, 1, 0.5, 0.5, 0.2, 0.1), 1e-15);
  spec.s = -1.0;
  EXPECT_THROW(spec.validate(), DomainError);
}

TEST(Kernels, OscillatoryIntegralMatchesClosedForm) {
  const int n = 1;
  const double s = 0.5;
  for (auto [v, w] : {std::pair{0.0, 0.0}, std::pair{0.7, 0.4}}) {
    const double lhs = oscillatory_Phi_integral(n, s, v, w);
    const double rhs = cns_oscillatory_normalized(n, s) * phi(n, 1, s, 1.0, v, w);
    EXPECT_NEAR(lhs, rhs, 1e-5 * rhs);
  }
}

}  // namespace
}  // namespace hext
