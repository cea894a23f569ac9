// Copyright 2026 The hext Authors.
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy at
// http://www.apache.org/licenses/LICENSE-2.0

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <sstream>

#include "hext/checks.hpp"
#include "hext/profile.hpp"
#include "hext/report.hpp"
#include "hext/special_math.hpp"

namespace hext {
namespace {

TEST(Report, EqualityAndInequality) {
  const CheckReport eq = CheckReport::equality("x", {{"s", 0.5}}, 1.0005, 1.0, 1e-3);
  EXPECT_TRUE(eq.pass);
  EXPECT_NEAR(eq.rel_err, 5e-4, 1e-12);
  EXPECT_FALSE(CheckReport::equality("x", {}, 1.01, 1.0, 1e-3).pass);
  EXPECT_TRUE(CheckReport::inequality("y", {}, 2.0, 1.0, 1e-3).pass);
  EXPECT_FALSE(CheckReport::inequality("y", {}, 1.0, 2.0, 1e-3).pass);
}

TEST(Report, JsonRoundTrip) {
  CheckReport r = CheckReport::equality("route", {{"rho", 0.3}, {"s", 0.5}}, 0.25, 0.2501, 1e-3,
                                        "note");
  const CheckReport back = CheckReport::from_json(r.to_json());
  EXPECT_EQ(back.name, r.name);
  EXPECT_EQ(back.params, r.params);
  EXPECT_EQ(back.lhs, r.lhs);
  EXPECT_EQ(back.pass, r.pass);
  EXPECT_EQ(back.notes, r.notes);

  r.tol = std::numeric_limits<double>::infinity();
  EXPECT_TRUE(std::isinf(CheckReport::from_json(r.to_json()).tol));
}

TEST(Report, SuiteVerdict) {
  CheckSuite suite{"demo", {}, 0.0};
  suite.reports.push_back(CheckReport::equality("a", {}, 1.0, 1.0 + 1e-6, 1e-3));
  CheckReport info = CheckReport::equality("b", {}, 1.0, 2.0, 1e-3);
  info.tol = std::numeric_limits<double>::infinity();
  info.pass = true;
  suite.reports.push_back(info);
  EXPECT_TRUE(suite.pass());
  EXPECT_LT(suite.worst_rel_err(), 1e-5);
  suite.reports.push_back(CheckReport::equality("c", {}, 1.0, 2.0, 1e-3));
  EXPECT_FALSE(suite.pass());
}

TEST(Checks, CatalogListsEveryCriterionInOrder) {
  const auto& catalog = check_catalog();
  int expected = 1;
  for (const CheckInfo& c : catalog) {
    if (c.criterion == 0) continue;
    EXPECT_EQ(c.criterion, expected++);
  }
  EXPECT_EQ(expected, 16);
  EXPECT_EQ(find_check("phi-mass").criterion, 1);
  EXPECT_THROW(find_check("missing"), DomainError);
}

TEST(Checks, QuickRunsAreReproducible) {
  CheckOptions opt;
  opt.quick = true;
  opt.seed = 5;
  const CheckSuite a = run_check("oscillatory", opt);
  const CheckSuite b = run_check("oscillatory", opt);
  ASSERT_EQ(a.reports.size(), b.reports.size());
  for (std::size_t i = 0; i < a.reports.size(); ++i) EXPECT_EQ(a.reports[i].lhs, b.reports[i].lhs);
  EXPECT_TRUE(a.pass());
}

TEST(Checks, OverridesNarrowTheGrid) {
  CheckOptions opt;
  opt.s = 0.5;
  opt.n = 1;
  opt.m = 1;
  const CheckSuite suite = run_check("phi-mass", opt);
  EXPECT_EQ(suite.reports.size(), 1u);
  EXPECT_TRUE(suite.pass());
}

TEST(Profile, InterpolatesSmoothData) {
  auto f = [](double r, double z) { return std::exp(-r * r - z * z); };
  const BiRadialProfile p = BiRadialProfile::sample(
      1, 1, {f, 1.0, "gauss"}, BiRadialProfile::log_grid(1e-3, 6.0, 120),
      BiRadialProfile::log_grid(1e-3, 6.0, 120));
  EXPECT_NEAR(p(0.5, 0.3), f(0.5, 0.3), 1e-5);
  EXPECT_NEAR(p.value_at(10, 20), f(p.r_grid()[10], p.zeta_grid()[20]), 1e-15);

  std::stringstream ss;
  p.write(ss);
  const BiRadialProfile q = BiRadialProfile::read(ss);
  EXPECT_EQ(q.r_grid().size(), p.r_grid().size());
  EXPECT_NEAR(q(0.5, 0.3), p(0.5, 0.3), 1e-14);
}

}  // namespace
}  // namespace hext
