// Copyright 2026 The hext Authors.
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy at
// http://www.apache.org/licenses/LICENSE-2.0

#include <gtest/gtest.h>

#include <cmath>

#include "hext/constants.hpp"
#include "hext/extension.hpp"

namespace hext {
namespace {

class ExtensionTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    f_ = new GaussianMixture(GaussianMixture::single(1.0, 1.0));
    u_ = new ExtensionSolution(
        solve_spectral(1, *f_, FractionalOrder(0.5, OrderContext::kUnit), lambda_grid(60.0)));
  }
  static void TearDownTestSuite() {
    delete u_;
    delete f_;
  }
  static GaussianMixture* f_;
  static ExtensionSolution* u_;
};
GaussianMixture* ExtensionTest::f_ = nullptr;
ExtensionSolution* ExtensionTest::u_ = nullptr;

TEST_F(ExtensionTest, BoundaryValues) {
  EXPECT_EQ((*u_)(0.5, 0.3, 0.0), (*f_)(0.5, 0.3));
  EXPECT_NEAR((*u_)(0.5, 0.3, 1e-4), (*f_)(0.5, 0.3), 1e-3);
  EXPECT_EQ(u_->route(), Route::kSpectral);
  ASSERT_TRUE(u_->spectral());
}

TEST_F(ExtensionTest, DecaysInRho) {
  double prev = (*u_)(0.0, 0.0, 0.1);
  for (double rho : {0.5, 1.0, 2.0, 4.0}) {
    const double v = (*u_)(0.0, 0.0, rho);
    EXPECT_LT(v, prev);
    prev = v;
  }
}

TEST_F(ExtensionTest, SolvesTheExtensionEquation) {
  for (double rho : {0.3, 1.0}) {
    const double res = pde_residual(*u_, 0.5, 0.3, rho, 1e-2);
    EXPECT_LT(std::abs(res), 1e-3 * std::abs((*u_)(0.5, 0.3, rho)) / (rho * rho));
  }
}

TEST_F(ExtensionTest, HeatRouteAgrees) {
  const ExtensionSolution heat =
      solve_heat_semigroup(heisenberg(1), *f_, FractionalOrder(0.5, OrderContext::kUnit));
  for (double rho : {0.3, 1.5}) {
    const double ref = (*u_)(0.5, 0.3, rho);
    EXPECT_NEAR(heat(0.5, 0.3, rho), ref, 1e-6 * ref);
  }
}

TEST_F(ExtensionTest, DtnLimit) {
  const Extrapolation e = dtn_limit(*u_, 0.5, 0.3);
  const double ls = u_->spectral()->ls(0.5, 0.3);
  EXPECT_NEAR(e.limit, dtn_constant(0.5) * ls, 1e-4 * std::abs(ls));
}

TEST(Extension, ExtrapolationRecoversPolynomialLimit) {
  std::vector<double> rho = default_rho_sequence(6), values;
  ASSERT_EQ(rho.size(), 6u);
  EXPECT_NEAR(rho[0], 0.2, 1e-15);
  for (double x : rho) values.push_back(3.0 + 2.0 * x + 0.5 * x * x);
  const Extrapolation e = extrapolate(rho, values, {1.0, 2.0});
  EXPECT_NEAR(e.limit, 3.0, 1e-12);
  EXPECT_LT(e.error, 1e-10);
}

TEST(Extension, SingularIntegralAgreesWithSpectral) {
  const double s = 0.3;
  const GaussianMixture f = GaussianMixture::single(1.0, 1.0);
  SpectralExtension sp(f.spectrum(1, lambda_grid(60.0)), s);
  const double ref = sp.ls(0.5, 0.3);
  EXPECT_NEAR(ls_singular_integral(1, f.function(), s, 0.5, 0.3), ref, 1e-4 * std::abs(ref));
}

TEST(Extension, RouteNames) {
  for (Route r : {Route::kConvolution, Route::kSpectral, Route::kHeatSemigroup}) {
    EXPECT_EQ(parse_route(route_name(r)), r);
  }
  EXPECT_THROW(parse_route("fourier"), DomainError);
}

TEST(Extension, ConvolutionRouteRequiresOneCentreDimension) {
  const GaussianMixture f = GaussianMixture::single();
  EXPECT_THROW(solve_convolution(quaternionic(1), f.function(), FractionalOrder(0.5, OrderContext::kUnit)),
               DomainError);
}

TEST(Extension, GaussianMixtureValidation) {
  GaussianMixture g = GaussianMixture::single();
  g.terms.push_back({1.0, -1.0, 1.0});
  EXPECT_THROW(g.validate(), DomainError);
}

}  // namespace
}  // namespace hext
