// Copyright 2026 The hext Authors.
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy at
// http://www.apache.org/licenses/LICENSE-2.0

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "hext/special_math.hpp"

namespace hext {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(SpecialMath, GammaAgreesWithStd) {
  for (double x : {0.1, 0.5, 1.0, 2.5, 7.25, 30.0}) {
    EXPECT_NEAR(hext::gamma(x), std::tgamma(x), 1e-13 * std::tgamma(x));
    EXPECT_NEAR(log_gamma(x), std::lgamma(x), 1e-13 * (1.0 + std::abs(std::lgamma(x))));
  }
  EXPECT_NEAR(hext::gamma(0.5), std::sqrt(kPi), 1e-15);
}

TEST(SpecialMath, GammaRatioAtLargeArguments) {
  // Gamma(a) / Gamma(a + 1/2) ~ a^{-1/2} (1 + 1/(8a)).
  const double a = 1e6;
  EXPECT_NEAR(gamma_ratio(a, a + 0.5) * std::sqrt(a), 1.0 + 1.0 / (8.0 * a), 1e-12);
  EXPECT_NEAR(log_gamma_ratio(3.5, 1.25), std::lgamma(3.5) - std::lgamma(1.25), 1e-14);
}

TEST(SpecialMath, GaussSummationMatchesSeries) {
  const double a = 0.3, b = 0.7, c = 2.6;
  const double closed = std::tgamma(c) * std::tgamma(c - a - b) /
                        (std::tgamma(c - a) * std::tgamma(c - b));
  EXPECT_NEAR(gauss_2f1_at_one(a, b, c), closed, 1e-14);
  EXPECT_NEAR(gauss_2f1_series(a, b, c, 200000), closed, 1e-6);
}

TEST(SpecialMath, BesselAgreesWithStd) {
  for (double nu : {0.0, 0.5, 2.0}) {
    for (double x : {0.3, 1.0, 8.0}) {
      EXPECT_NEAR(bessel_j(nu, x), std::cyl_bessel_j(nu, x), 1e-13);
      EXPECT_NEAR(bessel_k(nu, x), std::cyl_bessel_k(nu, x), 1e-12 * std::cyl_bessel_k(nu, x));
    }
  }
}

TEST(SpecialMath, LaguerreAgreesWithStd) {
  for (unsigned k : {0u, 1u, 5u, 20u}) {
    for (unsigned alpha : {0u, 2u}) {
      for (double x : {0.1, 2.0, 11.0}) {
        const double ref = std::assoc_laguerre(k, alpha, x);
        EXPECT_NEAR(laguerre(static_cast<int>(k), alpha, x), ref, 1e-11 * (1.0 + std::abs(ref)));
      }
    }
  }
  EXPECT_THROW(laguerre(-1, 0.0, 1.0), DomainError);
}

TEST(SpecialMath, SphereAreas) {
  EXPECT_NEAR(unit_sphere_area(1), 2.0, 1e-15);
  EXPECT_NEAR(unit_sphere_area(2), 2.0 * kPi, 1e-14);
  EXPECT_NEAR(unit_sphere_area(3), 4.0 * kPi, 1e-14);
  EXPECT_NEAR(unit_sphere_area(4), 2.0 * kPi * kPi, 1e-13);
}

TEST(SpecialMath, AdaptiveQuadrature) {
  const double inf = std::numeric_limits<double>::infinity();
  EXPECT_NEAR(integrate_1d([](double x) { return std::exp(-x * x); }, 0.0, inf),
              0.5 * std::sqrt(kPi), 1e-11);
  EXPECT_NEAR(integrate_1d([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, {},
                           Endpoints::kSingularLeft),
              2.0, 1e-9);
  const QuadratureResult r = integrate_1d_detailed([](double x) { return std::cos(x); }, 0.0, 1.0);
  EXPECT_NEAR(r.value, std::sin(1.0), 1e-14);
  EXPECT_LT(r.error, 1e-9);
}

TEST(SpecialMath, QuadratureConfigValidation) {
  QuadratureConfig cfg;
  cfg.rel_tol = -1.0;
  EXPECT_THROW(cfg.validate(), DomainError);
  EXPECT_EQ(QuadratureConfig{}.with_rel_tol(1e-3).rel_tol, 1e-3);
}

TEST(SpecialMath, GaussLegendreIsExactForPolynomials) {
  const QuadratureRule rule = gauss_legendre(-1.0, 2.0, 3, 7);
  EXPECT_EQ(rule.size(), 21u);
  // Degree 13 is integrated exactly by 7 points per panel.
  const double v = rule.apply([](double x) { return std::pow(x, 13); });
  EXPECT_NEAR(v, (std::pow(2.0, 14) - 1.0) / 14.0, 1e-10);
  EXPECT_THROW(gauss_legendre(0.0, 1.0, 1, 8), DomainError);
}

TEST(SpecialMath, HankelTransformOfGaussian) {
  // The inverse Fourier transform of exp(-|p|^2 / 2) on R^m is
  // (2 pi)^{-m/2} exp(-|x|^2 / 2).
  for (int m : {1, 2, 3}) {
    for (double r : {0.0, 0.7, 2.0}) {
      const double ref = std::pow(2.0 * kPi, -0.5 * m) * std::exp(-0.5 * r * r);
      EXPECT_NEAR(hankel_transform([](double p) { return std::exp(-0.5 * p * p); }, m, r), ref,
                  1e-8 * ref)
          << "m=" << m << " r=" << r;
    }
  }
}

}  // namespace
}  // namespace hext
