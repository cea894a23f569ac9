// Copyright 2026 The hext Authors.
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy at
// http://www.apache.org/licenses/LICENSE-2.0

#include "hext/constants.hpp"

#include <cmath>
#include <numbers>

#include "hext/special_math.hpp"

namespace hext {
namespace {

constexpr double kPi = std::numbers::pi;
const double kLogPi = std::log(kPi);
const double kLog2 = std::log(2.0);

void require_positive_s(double s, const char* who) {
  if (!(s > 0.0)) throw DomainError(std::string(who) + ": requires s > 0");
}

void require_unit(double s, const char* who) {
  if (!(s > 0.0 && s < 1.0)) throw DomainError(std::string(who) + ": requires 0 < s < 1");
}

void require_dims(int n, int m, const char* who) {
  if (n < 1 || m < 1) throw DomainError(std::string(who) + ": n and m must be >= 1");
}

}  // namespace

bool in_forbidden_set(int n, double s) {
  double k = 0.5 * (std::abs(s) - n - 1.0);
  return k >= 0.0 && k == std::floor(k);
}

FractionalOrder::FractionalOrder(double s, OrderContext context, int n) : s_(s), context_(context) {
  if (!std::isfinite(s)) throw DomainError("FractionalOrder: s must be finite");
  switch (context) {
    case OrderContext::kExtension:
      if (!(s > 0.0)) throw DomainError("FractionalOrder: extension context needs s > 0");
      break;
    case OrderContext::kConformal:
      if (in_forbidden_set(n, s)) throw DomainError("FractionalOrder: s lies in the forbidden set");
      break;
    case OrderContext::kUnit:
      if (!(s > 0.0 && s < 1.0)) throw DomainError("FractionalOrder: unit context needs 0 < s < 1");
      break;
    case OrderContext::kHalf:
      if (!(s > 0.0 && s < 0.5)) throw DomainError("FractionalOrder: half context needs 0 < s < 1/2");
      break;
  }
}

double log_c1(int n, int m, double s) {
  require_dims(n, m, "c1");
  require_positive_s(s, "c1");
  return m * std::log(4.0) - (n + 0.5 * m) * kLogPi + log_gamma(n + s) +
         log_gamma(0.5 * (n + m + s)) - log_gamma(s) - log_gamma(0.5 * (n + s));
}

double c1(int n, int m, double s) { return std::exp(log_c1(n, m, s)); }

double c2(int n, int m, double s) {
  require_dims(n, m, "c2");
  if (!(std::abs(s) < n + 1)) throw DomainError("c2: requires |s| < n + 1");
  return std::pow(4.0, 2.0 * s) * gamma_ratio(0.5 * (n + 1 + s), 0.5 * (n + 1 - s)) *
         gamma_ratio(0.5 * (n + m + s), 0.5 * (n + m - s));
}

double log_c2(int n, int m, double s) {
  require_dims(n, m, "c2");
  if (!(std::abs(s) < n + 1)) throw DomainError("c2: requires |s| < n + 1");
  return 4.0 * s * kLog2 + log_gamma_ratio(0.5 * (n + 1 + s), 0.5 * (n + 1 - s)) +
         log_gamma_ratio(0.5 * (n + m + s), 0.5 * (n + m - s));
}

double c3(int n, int m, double s) {
  require_dims(n, m, "c3");
  require_unit(s, "c3");
  return 2.0 * (n + m - s) * std::pow(kPi, n + 0.5 * m) * std::pow(4.0, -m) * gamma(1.0 - s) *
         gamma_ratio(0.5 * (n + 2 - s), n - s + 1.0) / gamma(0.5 * (n + m + 2 - s));
}

double log_dtn_constant(double s) {
  require_unit(s, "dtn_constant");
  return (1.0 - 2.0 * s) * kLog2 + log_gamma(1.0 - s) - log_gamma(s);
}

double dtn_constant(double s) {
  require_unit(s, "dtn_constant");
  return std::pow(2.0, 1.0 - 2.0 * s) * gamma_ratio(1.0 - s, s);
}

double limit2_constant(double s) {
  require_unit(s, "limit2_constant");
  return std::abs(gamma(-s)) * std::pow(4.0, -s) / gamma(s);
}

double cns_oscillatory(int n, double s) {
  if (!(n + s + 1.0 > 0.0)) throw DomainError("cns_oscillatory: requires n + s + 1 > 0");
  double g = gamma(0.5 * (n + s + 1.0));
  return std::pow(2.0, n - 1.0 + 3.0 * s) * std::pow(kPi, -n - 1.0) * g * g;
}

double cns_oscillatory_normalized(int n, double s) {
  return 2.0 * std::pow(4.0 * kPi, n + 1.0) * cns_oscillatory(n, s);
}

double log_lemma_I(int n, int m, double j, double alpha) {
  require_dims(n, m, "lemma_I");
  if (!(alpha - j > 0.0)) throw DomainError("lemma_I: requires alpha - j > 0 (integral diverges)");
  if (!(alpha > -n)) throw DomainError("lemma_I: requires alpha > -n");
  return (n + 0.5 * m) * kLogPi - m * std::log(4.0) + log_gamma(alpha - j) +
         log_gamma(0.5 * (n + alpha)) - log_gamma(n - j + alpha) - log_gamma(0.5 * (n + m + alpha));
}

double lemma_I(int n, int m, double j, double alpha) {
  if (!(alpha - j > 0.0)) throw DomainError("lemma_I: requires alpha - j > 0 (integral diverges)");
  if (!(alpha > -n)) throw DomainError("lemma_I: requires alpha > -n");
  if (n - j + alpha <= 0.0 && n - j + alpha == std::floor(n - j + alpha)) return 0.0;
  return std::pow(kPi, n + 0.5 * m) * std::pow(4.0, -m) * gamma(alpha - j) *
         gamma_ratio(0.5 * (n + alpha), n - j + alpha) / gamma(0.5 * (n + m + alpha));
}

double radon_section_constant(int n, int m, double s) {
  return std::exp(log_c1(n, 1, s) - log_c1(n, m, s));
}

double singular_integral_constant(int n, int m, double s) {
  require_dims(n, m, "singular_integral_constant");
  require_unit(s, "singular_integral_constant");
  return std::pow(4.0, m + s) * std::pow(kPi, -(n + 0.5 * m)) * gamma(n + s) *
         gamma(0.5 * (n + m + s)) / (gamma(0.5 * (n + s)) * std::abs(gamma(-s)));
}

CoeffTable coeff_table(int ell, int n, int m, double s, CoeffSource source) {
  if (ell < 0) throw DomainError("coeff_table: ell must be >= 0");
  require_dims(n, m, "coeff_table");
  // Differentiating X^j D^{-q}, X = rho^2+|v|^2, D = X^2 + 16|z|^2 and
  // q = (n+m+l-s+j)/2, in rho^2 gives j X^{j-1} D^{-q} - 2q X^{j+1} D^{-q-1}.
  const double half = source == CoeffSource::kPrintedRecurrence ? 0.5 : 1.0;
  std::vector<double> c{1.0};
  for (int l = 0; l < ell; ++l) {
    std::vector<double> next(l + 2, 0.0);
    for (int j = 0; j <= l + 1; ++j) {
      double up = (j + 1 <= l) ? (j + 1) * c[j + 1] : 0.0;
      double down = (j >= 1) ? (n + m + l + j - 1 - s) * c[j - 1] : 0.0;
      next[j] = up - half * down;
    }
    c = std::move(next);
  }
  return {ell, c, source};
}

double a_constant(int ell, int n, int m, double s, const CoeffTable& table) {
  require_dims(n, m, "a_constant");
  if (ell < 1) throw DomainError("a_constant: ell must be >= 1");
  if (!(s >= ell - 1 && s < ell)) throw DomainError("a_constant: requires ell - 1 <= s < ell");
  if (table.ell != ell || static_cast<int>(table.coeffs.size()) != ell + 1) {
    throw DomainError("a_constant: coefficient table has the wrong order");
  }
  double sum = 0.0;
  for (int j = 0; j <= ell; ++j) {
    if (table.coeffs[j] == 0.0) continue;
    sum += table.coeffs[j] * gamma_ratio(0.5 * (n + ell + j - s), 0.5 * (n + m + ell + j - s));
  }
  return std::pow(kPi, n + 0.5 * m) * std::pow(4.0, -m) * gamma_ratio(ell - s, n + ell - s) * sum;
}

double higher_order_constant(int ell, int n, int m, double s, const CoeffTable& table) {
  return c1(n, m, s) / c2(n, m, s) * a_constant(ell, n, m, s, table);
}

std::vector<NamedConstant> constant_table(int n, int m, double s) {
  std::vector<NamedConstant> out;
  if (s > 0.0) out.push_back({"c1", c1(n, m, s), log_c1(n, m, s)});
  if (std::abs(s) < n + 1) out.push_back({"c2", c2(n, m, s), log_c2(n, m, s)});
  if (s > 0.0 && s < 1.0) {
    double v3 = c3(n, m, s);
    out.push_back({"c3", v3, std::log(v3)});
    out.push_back({"dtn", dtn_constant(s), log_dtn_constant(s)});
    double l2 = limit2_constant(s);
    out.push_back({"limit2", l2, std::log(l2)});
  }
  return out;
}

}  // namespace hext
