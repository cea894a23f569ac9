// Copyright 2026 The hext Authors.
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include "hext/report.hpp"
#include "hext/special_math.hpp"

namespace hext {

// Radon transform in the centre variable of a function of |z| on R^m:
//   R f(t) = int_{R^{m-1}} f(sqrt(t^2 + |z'|^2)) dz'.
// For m = 1 this is f(|t|).
double radon_radial(int m, const RealFunction& f, double t, const QuadratureConfig& cfg = {});

// The hyperplane section of ((1+|v|^2)^2 + 16|z|^2)^{-(n+m+s)/2} against
// radon_section_constant(n, m, s) ((1+|v|^2)^2 + 16 t^2)^{-(n+1+s)/2}.
CheckReport cross_section_identity(int n, int m, double s, double v_norm, double t,
                                   const QuadratureConfig& cfg = {}, double tol = 1e-6);

}  // namespace hext
