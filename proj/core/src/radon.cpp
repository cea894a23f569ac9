// Copyright 2026 The hext Authors.
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy at
// http://www.apache.org/licenses/LICENSE-2.0

#include "hext/radon.hpp"

#include <cmath>
#include <limits>

#include "hext/constants.hpp"

namespace hext {

double radon_radial(int m, const RealFunction& f, double t, const QuadratureConfig& cfg) {
  if (m < 1) throw DomainError("radon_radial: m must be >= 1");
  cfg.validate();
  if (m == 1) return f(std::abs(t));
  const double inf = std::numeric_limits<double>::infinity();
  auto g = [&](double y) {
    const double v = f(std::hypot(t, y));
    return v == 0.0 ? 0.0 : v * std::pow(y, m - 2);
  };
  QuadratureConfig c = cfg;
  c.abs_tol = 0.0;
  return unit_sphere_area(m - 1) * integrate_1d(g, 0.0, inf, c);
}

CheckReport cross_section_identity(int n, int m, double s, double v_norm, double t,
                                   const QuadratureConfig& cfg, double tol) {
  if (n < 1 || m < 2) throw DomainError("cross_section_identity: requires n >= 1 and m >= 2");
  if (!(s > 0.0)) throw DomainError("cross_section_identity: requires s > 0");
  const double A = 1.0 + v_norm * v_norm;
  const double A2 = A * A;
  QuadratureConfig c = cfg;
  c.tail_cut = 0.25 * A;
  auto kernel = [&](double zeta) { return std::pow(A2 + 16.0 * zeta * zeta, -0.5 * (n + m + s)); };
  const double lhs = radon_radial(m, kernel, t, c);
  const double rhs = radon_section_constant(n, m, s) * std::pow(A2 + 16.0 * t * t, -0.5 * (n + 1 + s));
  return CheckReport::equality("radon_cross_section",
                               {{"n", n}, {"m", m}, {"s", s}, {"v", v_norm}, {"t", t}}, lhs, rhs,
                               tol);
}

}  // namespace hext
