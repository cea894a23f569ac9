// Copyright 2026 The hext Authors.
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy at
// http://www.apache.org/licenses/LICENSE-2.0

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "hext/radon.hpp"

namespace hext {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(Radon, GaussianSections) {
  // The (m-1)-dimensional integral of exp(-t^2 - |z'|^2) is pi^{(m-1)/2} exp(-t^2).
  auto g = [](double x) { return std::exp(-x * x); };
  for (int m : {1, 2, 3}) {
    for (double t : {0.0, 0.4, 1.5}) {
      const double ref = std::pow(kPi, 0.5 * (m - 1)) * std::exp(-t * t);
      EXPECT_NEAR(radon_radial(m, g, t), ref, 1e-10 * ref) << "m=" << m << " t=" << t;
    }
  }
}

TEST(Radon, CrossSectionIdentity) {
  for (int n : {1, 2}) {
    for (int m : {2, 3}) {
      for (double s : {0.3, 0.7}) {
        const CheckReport r = cross_section_identity(n, m, s, 0.6, 0.25);
        EXPECT_TRUE(r.pass) << r;
      }
    }
  }
}

}  // namespace
}  // namespace hext
