// Copyright 2026 The hext Authors.
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <string>
#include <vector>

namespace hext {

enum class OrderContext {
  kExtension,  // s > 0
  kConformal,  // s avoids the forbidden set +-(n + 2k + 1)
  kUnit,       // 0 < s < 1
  kHalf,       // 0 < s < 1/2
};

class FractionalOrder {
 public:
  // `n` is only consulted for the conformal context.
  FractionalOrder(double s, OrderContext context, int n = 1);
  double value() const { return s_; }
  OrderContext context() const { return context_; }
  operator double() const { return s_; }

 private:
  double s_;
  OrderContext context_;
};

// True when s = +-(n + 2k + 1) for some integer k >= 0.
bool in_forbidden_set(int n, double s);

// Each constant has a log-value companion for large arguments.
double c1(int n, int m, double s);
double log_c1(int n, int m, double s);
double c2(int n, int m, double s);
double log_c2(int n, int m, double s);
double c3(int n, int m, double s);
double dtn_constant(double s);
double log_dtn_constant(double s);
double limit2_constant(double s);

// Constant in front of the oscillatory double integral as printed,
// 2^{n-1+3s} pi^{-n-1} Gamma((n+s+1)/2)^2.
double cns_oscillatory(int n, double s);
// The value the double integral actually has, 2 (4 pi)^{n+1} times the above.
double cns_oscillatory_normalized(int n, double s);

// int_N (1+|v|^2)^j ((1+|v|^2)^2 + 16|z|^2)^{-(n+m+alpha)/2} dv dz.
double lemma_I(int n, int m, double j, double alpha);
double log_lemma_I(int n, int m, double j, double alpha);

// Constant of the Radon cross-section identity, C1(n,1,s) / C1(n,m,s).
double radon_section_constant(int n, int m, double s);

// Prefactor of the pointwise singular-integral formula for L_s.
double singular_integral_constant(int n, int m, double s);

enum class CoeffSource { kDifferentiation, kPrintedRecurrence };

// c(l, j), j = 0..l, in ((2 rho)^{-1} d/drho)^l phi_{-s,rho}
//   = sum_j c(l,j) g_{j,rho} phi_{l-s,rho}.
struct CoeffTable {
  int ell = 0;
  std::vector<double> coeffs;
  CoeffSource source = CoeffSource::kDifferentiation;
};
CoeffTable coeff_table(int ell, int n, int m, double s,
                       CoeffSource source = CoeffSource::kDifferentiation);

// a(n,m,s) = sum_j c(l,j) int_N g_{j,1} phi_{l-s,1}.
double a_constant(int ell, int n, int m, double s, const CoeffTable& table);
// C1 / C2 * a(n,m,s): the constant of the order-l limit.
double higher_order_constant(int ell, int n, int m, double s, const CoeffTable& table);

struct NamedConstant {
  std::string name;
  double value;
  double log_value;
};
// c1, c2, c3, dtn, limit2 where defined for (n, m, s).
std::vector<NamedConstant> constant_table(int n, int m, double s);

}  // namespace hext
