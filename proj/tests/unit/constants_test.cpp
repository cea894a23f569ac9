// Copyright 2026 The hext Authors.
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy at
// http://www.apache.org/licenses/LICENSE-2.0

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "hext/constants.hpp"
#include "hext/special_math.hpp"

namespace hext {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(Constants, OrderContexts) {
  EXPECT_NO_THROW(FractionalOrder(0.5, OrderContext::kUnit));
  EXPECT_THROW(FractionalOrder(1.2, OrderContext::kUnit), DomainError);
  EXPECT_THROW(FractionalOrder(0.5, OrderContext::kHalf), DomainError);
  EXPECT_THROW(FractionalOrder(0.0, OrderContext::kExtension), DomainError);
  EXPECT_THROW(FractionalOrder(2.0, OrderContext::kConformal, 1), DomainError);
  EXPECT_NO_THROW(FractionalOrder(2.5, OrderContext::kConformal, 1));
  EXPECT_TRUE(in_forbidden_set(1, 2.0));
  EXPECT_TRUE(in_forbidden_set(1, -4.0));
  EXPECT_FALSE(in_forbidden_set(1, 3.0));
  EXPECT_FALSE(in_forbidden_set(1, 2.5));
}

TEST(Constants, DtnConstant) {
  EXPECT_NEAR(dtn_constant(0.5), 1.0, 1e-15);
  for (double s : {0.1, 0.3, 0.7, 0.95}) {
    const double ref = std::pow(2.0, 1.0 - 2.0 * s) * std::tgamma(1.0 - s) / std::tgamma(s);
    EXPECT_NEAR(dtn_constant(s), ref, 1e-14 * ref);
    EXPECT_NEAR(log_dtn_constant(s), std::log(ref), 1e-13);
    const double l2 = std::abs(std::tgamma(-s)) * std::pow(4.0, -s) / std::tgamma(s);
    EXPECT_NEAR(limit2_constant(s), l2, 1e-13 * l2);
  }
}

TEST(Constants, GammaIdentity) {
  for (int n : {1, 2, 4}) {
    for (int m : {1, 3}) {
      for (double s : {0.2, 0.5, 0.8}) {
        EXPECT_NEAR(c1(n, m, s) * c3(n, m, s) / c2(n, m, s), dtn_constant(s),
                    1e-12 * dtn_constant(s));
        EXPECT_NEAR(std::log(c1(n, m, s)), log_c1(n, m, s), 1e-12);
        EXPECT_NEAR(std::log(c2(n, m, s)), log_c2(n, m, s), 1e-12);
      }
    }
  }
}

TEST(Constants, OscillatoryConstantNormalization) {
  for (int n : {1, 2}) {
    for (double s : {0.3, 0.5, 1.5}) {
      EXPECT_NEAR(cns_oscillatory_normalized(n, s) / cns_oscillatory(n, s),
                  2.0 * std::pow(4.0 * kPi, n + 1), 1e-10 * std::pow(4.0 * kPi, n + 1));
    }
  }
}

TEST(Constants, RadonSectionConstant) {
  for (int n : {1, 2}) {
    for (int m : {2, 3}) {
      for (double s : {0.3, 0.7}) {
        const double ref = std::pow(kPi / 16.0, 0.5 * (m - 1)) * std::tgamma(0.5 * (n + 1 + s)) /
                           std::tgamma(0.5 * (n + m + s));
        EXPECT_NEAR(radon_section_constant(n, m, s), ref, 1e-13 * ref);
      }
    }
  }
  EXPECT_NEAR(radon_section_constant(2, 1, 0.5), 1.0, 1e-15);
}

TEST(Constants, LemmaIIsPositiveAndConsistentInLogs) {
  for (double j : {0.0, 0.5, 1.0}) {
    for (double alpha : {1.5, 2.5, 3.5}) {
      const double v = lemma_I(1, 1, j, alpha);
      EXPECT_GT(v, 0.0);
      EXPECT_NEAR(std::log(v), log_lemma_I(1, 1, j, alpha), 1e-12);
    }
  }
}

TEST(Constants, HigherOrderCoefficients) {
  // l = 2, s = 3/2 on H^1: the differentiation coefficients give 1/4, the
  // printed recurrence gives -1/16.
  const CoeffTable exact = coeff_table(2, 1, 1, 1.5);
  const CoeffTable printed = coeff_table(2, 1, 1, 1.5, CoeffSource::kPrintedRecurrence);
  EXPECT_EQ(exact.coeffs.size(), 3u);
  EXPECT_NEAR(higher_order_constant(2, 1, 1, 1.5, exact), 0.25, 1e-12);
  EXPECT_NEAR(higher_order_constant(2, 1, 1, 1.5, printed), -0.0625, 1e-12);
  EXPECT_THROW(a_constant(2, 1, 1, 0.5, exact), DomainError);
  // l = 1: (2 rho)^{-1} d_rho carries -1/2 times the Dirichlet-to-Neumann constant.
  EXPECT_NEAR(higher_order_constant(1, 1, 1, 0.5, coeff_table(1, 1, 1, 0.5)),
              -0.5 * dtn_constant(0.5), 1e-12);
}

TEST(Constants, TableHasNamedEntries) {
  const auto table = constant_table(1, 1, 0.5);
  bool has_c1 = false, has_c2 = false;
  for (const auto& c : table) {
    has_c1 = has_c1 || c.name == "c1";
    has_c2 = has_c2 || c.name == "c2";
    if (std::isfinite(c.value) && c.value > 0.0) EXPECT_NEAR(std::log(c.value), c.log_value, 1e-12);
  }
  EXPECT_TRUE(has_c1 && has_c2);
}

}  // namespace
}  // namespace hext
