// Copyright 2026 The hext Authors.
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy at
// http://www.apache.org/licenses/LICENSE-2.0

#include "hext/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "hext/constants.hpp"

namespace hext {
namespace {

constexpr double kPi = std::numbers::pi;
const double kInf = std::numeric_limits<double>::infinity();

QuadratureConfig relative(const QuadratureConfig& cfg) {
  QuadratureConfig c = cfg;
  c.abs_tol = 0.0;
  return c;
}

double binomial_kn(int n, int k) {
  double b = 1.0;
  for (int i = 1; i < n; ++i) b *= (k + i) / static_cast<double>(i);
  return b;
}

double b_index(int n, int k, double s) { return 0.5 * (2.0 * k + n + 1.0 + s); }

void require_lambda(double lambda, const char* who) {
  if (!(lambda > 0.0)) throw DomainError(std::string(who) + ": lambda must be > 0");
}

}  // namespace

double log_l_function(double a, double b, double c, const QuadratureConfig& cfg) {
  if (!(a > 0.0) || !(b > 0.0)) throw DomainError("l_function: requires a > 0 and b > 0");
  const QuadratureConfig rc = relative(cfg);
  auto g = [=](double x) { return -2.0 * a * x + (b - 1.0) * std::log(x) - c * std::log1p(x); };
  // Split at the mode (or at the decay length when there is none).
  double x0 = std::min(1.0, 1.0 / (2.0 * a));
  double w = x0;
  if (b > 1.0) {
    const double B = 2.0 * a + c - b + 1.0;
    x0 = 2.0 * (b - 1.0) / (B + std::sqrt(B * B + 8.0 * a * (b - 1.0)));
    const double curv = (b - 1.0) / (x0 * x0) - c / ((1.0 + x0) * (1.0 + x0));
    w = curv > 0.0 ? 1.0 / std::sqrt(curv) : 1.0 + x0;
  }
  const double g0 = g(x0);
  // Near 0 the substitution x = x1 y^{1/b} absorbs the factor x^{b-1}; x1 is
  // small enough that the rest of the integrand is nearly constant there.
  const double x1 = std::min(x0, 1.0 / (1.0 + 2.0 * a + std::abs(c)));
  auto head = [&](double y) {
    const double x = x1 * std::pow(y, 1.0 / b);
    return std::exp(-2.0 * a * x - c * std::log1p(x) + b * std::log(x1) - std::log(b) - g0);
  };
  auto e = [&](double x) { return x <= 0.0 ? 0.0 : std::exp(g(x) - g0); };
  const double x2 = x0 + 10.0 * w;
  // Beyond x2 the integrand is algebraic up to x ~ 1/a; integrate in log x.
  auto tail = [&](double u) {
    const double x = std::exp(u);
    return std::isfinite(x) ? std::exp(u + g(x) - g0) : 0.0;
  };
  const double u2 = std::log(x2);
  const double u3 = std::max(u2, std::log(1.0 / (2.0 * a))) + 4.0;
  double total = integrate_1d(head, 0.0, 1.0, rc) + integrate_1d(e, x0, x2, rc) +
                 integrate_1d(tail, u2, u3, rc) + integrate_1d(tail, u3, kInf, rc);
  if (x1 < x0) total += integrate_1d(e, x1, x0, rc);
  return -a + g0 + std::log(total);
}

double l_function(double a, double b, double c, const QuadratureConfig& cfg) {
  return std::exp(log_l_function(a, b, c, cfg));
}

double log_kernel_coefficient(int n, int k, double lambda, double rho, double s,
                              CoefficientForm form, const QuadratureConfig& cfg) {
  if (n < 1 || k < 0) throw DomainError("kernel_coefficient: need n >= 1 and k >= 0");
  require_lambda(lambda, "kernel_coefficient");
  if (!(rho > 0.0)) throw DomainError("kernel_coefficient: rho must be > 0");
  if (!(n + 1.0 + s > 0.0)) throw DomainError("kernel_coefficient: Gamma pole, need s > -(n+1)");
  const double b = b_index(n, k, s);
  const double pref = form == CoefficientForm::kExact
                          ? (n + 1.0) * std::log(kPi) - (n + 2.0 * s + 1.0) * std::log(2.0)
                          : (n + 1.0) * std::log(2.0 * kPi);
  return pref - 2.0 * log_gamma(0.5 * (n + 1.0 + s)) + s * std::log(lambda) +
         log_l_function(0.25 * rho * rho * lambda, b, b - s, cfg);
}

double kernel_coefficient(int n, int k, double lambda, double rho, double s, CoefficientForm form,
                          const QuadratureConfig& cfg) {
  return std::exp(log_kernel_coefficient(n, k, lambda, rho, s, form, cfg));
}

double ls_multiplier(int n, int k, double lambda, double s) {
  if (n < 1 || k < 0) throw DomainError("ls_multiplier: need n >= 1 and k >= 0");
  require_lambda(lambda, "ls_multiplier");
  const double b = b_index(n, k, s), c = b - s;
  if ((b <= 0.0 && b == std::floor(b)) || (c <= 0.0 && c == std::floor(c))) {
    throw DomainError("ls_multiplier: s lies in the forbidden set");
  }
  if (s == 0.0) return 1.0;
  return std::pow(2.0 * lambda, s) * gamma_ratio(b, c);
}

double heat_multiplier(int n, int k, double lambda, double t) {
  return std::exp(-(2.0 * k + n) * std::abs(lambda) * t);
}

std::vector<double> laguerre_functions(int n, double lambda, double r, int count) {
  std::vector<double> out(std::max(count, 0), 0.0);
  if (count <= 0) return out;
  const double x = 0.5 * lambda * r * r;
  const double alpha = n - 1.0;
  // Values are carried as p * exp(log_scale) so that large x cannot underflow.
  double log_scale = -0.5 * x;
  double prev = 0.0, cur = 1.0;
  for (int k = 0; k < count; ++k) {
    if (k == 1) {
      prev = cur;
      cur = 1.0 + alpha - x;
    } else if (k > 1) {
      double next = ((2.0 * k - 1.0 + alpha - x) * cur - (k - 1.0 + alpha) * prev) / k;
      prev = cur;
      cur = next;
    }
    if (std::abs(cur) > 1e250) {
      cur *= 1e-250;
      prev *= 1e-250;
      log_scale += 250.0 * std::log(10.0);
    }
    out[k] = log_scale < -745.0 ? 0.0 : cur * std::exp(log_scale);
  }
  return out;
}

double laguerre_function(int n, int k, double lambda, double r) {
  if (k < 0) throw DomainError("laguerre_function: k must be >= 0");
  return laguerre_functions(n, lambda, r, k + 1)[k];
}

double plancherel_weight(int n, int k, double lambda) {
  return 2.0 * std::pow(2.0 * kPi, -n - 1.0) * std::pow(lambda, n) * binomial_kn(n, k);
}

std::vector<double> laguerre_transform_all(int n, const BiRadialFunction& f, double lambda,
                                           int count, const TransformOptions& opt) {
  if (n < 1 || count < 1) throw DomainError("laguerre_transform: need n >= 1 and count >= 1");
  require_lambda(lambda, "laguerre_transform");
  const double core = f.scale > 0.0 ? f.scale : 1.0;
  const double r_max = opt.r_max > 0.0 ? opt.r_max : 40.0 * core;
  double panel = opt.panel;
  if (!(panel > 0.0)) panel = std::min(0.5 * core, 2.0 / std::sqrt(lambda * (2.0 * count + n)));
  const int panels = std::min(20000, std::max(1, static_cast<int>(std::ceil(r_max / panel))));
  QuadratureRule rule = gauss_legendre(0.0, r_max, panels, opt.points);
  std::vector<double> acc(count, 0.0);
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const double r = rule.nodes[i];
    const double fl =
        2.0 * kPi * hankel_transform([&](double t) { return f(r, t); }, 1, lambda, opt.cfg);
    if (fl == 0.0) continue;
    const double w = rule.weights[i] * fl * std::pow(r, 2 * n - 1);
    std::vector<double> phis = laguerre_functions(n, lambda, r, count);
    for (int k = 0; k < count; ++k) acc[k] += w * phis[k];
  }
  const double sphere = unit_sphere_area(2 * n);
  for (int k = 0; k < count; ++k) acc[k] *= sphere / binomial_kn(n, k);
  return acc;
}

double laguerre_transform(int n, const BiRadialFunction& f, double lambda, int k,
                          const TransformOptions& opt) {
  if (k < 0) throw DomainError("laguerre_transform: k must be >= 0");
  return laguerre_transform_all(n, f, lambda, k + 1, opt)[k];
}

LambdaGrid lambda_grid(double lambda_max, double lambda_min, int points) {
  if (!(lambda_min > 0.0) || !(lambda_max > lambda_min)) {
    throw DomainError("lambda_grid: need 0 < lambda_min < lambda_max");
  }
  std::vector<double> breaks{lambda_min};
  double b = lambda_min;
  while (2.0 * b < std::min(1.0, lambda_max)) {
    b *= 2.0;
    breaks.push_back(b);
  }
  if (lambda_max > 1.0) {
    double u = 1.0;
    while (u < lambda_max - 1e-9) {
      if (u > breaks.back()) breaks.push_back(u);
      u += 1.0;
    }
  }
  breaks.push_back(lambda_max);
  QuadratureRule rule = gauss_legendre(breaks, points);
  LambdaGrid g{rule.nodes, rule.weights};
  g.weights.front() += lambda_min;
  return g;
}

void LaguerreSpectrum::validate() const {
  if (n < 1) throw DomainError("LaguerreSpectrum: n must be >= 1");
  if (weight.size() != lambda.size() || coeffs.size() != lambda.size()) {
    throw DomainError("LaguerreSpectrum: node, weight and coefficient counts differ");
  }
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (!(lambda[i] > 0.0) || !(weight[i] >= 0.0)) {
      throw DomainError("LaguerreSpectrum: nodes must be positive with nonnegative weights");
    }
  }
}

int LaguerreSpectrum::k_max() const {
  std::size_t k = 0;
  for (const auto& c : coeffs) k = std::max(k, c.size());
  return static_cast<int>(k) - 1;
}

double LaguerreSpectrum::norm2() const { return spectral_inner(*this, *this); }

void LaguerreSpectrum::write(std::ostream& os) const {
  nlohmann::json header = {{"n", n}, {"nodes", lambda.size()}, {"tail_bound", tail_bound},
                           {"two_sided", true}};
  os << header.dump() << "\n";
  os << "lambda,weight,k,value\n";
  os.precision(17);
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (coeffs[i].empty()) os << lambda[i] << "," << weight[i] << ",-1,0\n";
    for (std::size_t k = 0; k < coeffs[i].size(); ++k) {
      os << lambda[i] << "," << weight[i] << "," << k << "," << coeffs[i][k] << "\n";
    }
  }
}

LaguerreSpectrum LaguerreSpectrum::read(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw DomainError("LaguerreSpectrum: missing header");
  nlohmann::json header = nlohmann::json::parse(line);
  LaguerreSpectrum out;
  out.n = header.at("n").get<int>();
  out.tail_bound = header.value("tail_bound", 0.0);
  std::getline(is, line);
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string a, b, c, d;
    std::getline(ss, a, ',');
    std::getline(ss, b, ',');
    std::getline(ss, c, ',');
    std::getline(ss, d, ',');
    const double lam = std::stod(a), w = std::stod(b);
    const long k = std::stol(c);
    if (out.lambda.empty() || out.lambda.back() != lam) {
      out.lambda.push_back(lam);
      out.weight.push_back(w);
      out.coeffs.emplace_back();
    }
    if (k >= 0) {
      if (static_cast<std::size_t>(k) != out.coeffs.back().size()) {
        throw DomainError("LaguerreSpectrum: rows must list k in increasing order");
      }
      out.coeffs.back().push_back(std::stod(d));
    }
  }
  if (out.lambda.size() != header.at("nodes").get<std::size_t>()) {
    throw DomainError("LaguerreSpectrum: node count does not match the header");
  }
  out.validate();
  return out;
}

LaguerreSpectrum gaussian_spectrum(int n, double alpha, double beta, const LambdaGrid& grid,
                                   double eps, int k_cap) {
  if (n < 1 || !(alpha > 0.0) || !(beta > 0.0)) {
    throw DomainError("gaussian_spectrum: need n >= 1, alpha > 0, beta > 0");
  }
  LaguerreSpectrum out;
  out.n = n;
  out.lambda = grid.nodes;
  out.weight = grid.weights;
  out.coeffs.resize(grid.nodes.size());
  for (std::size_t i = 0; i < grid.nodes.size(); ++i) {
    const double lam = grid.nodes[i];
    const double P = 2.0 * alpha / lam + 0.5;
    const double w = 1.0 - 1.0 / P;
    const double log_pref = 0.5 * std::log(kPi / beta) - lam * lam / (4.0 * beta) +
                            n * std::log(2.0 * kPi / lam) - n * std::log(P);
    if (log_pref < -700.0) continue;
    const double aw = std::abs(w);
    int K = 1;
    if (aw > 1e-300) {
      K = static_cast<int>(std::min<double>(k_cap, std::ceil(std::log(eps) / std::log(aw)) + 1.0));
      K = std::max(K, 1);
      out.tail_bound = std::max(out.tail_bound, std::pow(aw, K) / (1.0 - aw));
    }
    std::vector<double>& c = out.coeffs[i];
    c.resize(K);
    double v = std::exp(log_pref);
    for (int k = 0; k < K; ++k) {
      c[k] = v;
      v *= w;
    }
  }
  return out;
}

LaguerreSpectrum kernel_spectrum(int n, double s, double rho, const LambdaGrid& grid, double eps,
                                 int k_cap) {
  if (n < 1 || !(std::abs(s) < n + 1.0)) throw DomainError("kernel_spectrum: requires |s| < n + 1");
  if (!(rho > 0.0)) throw DomainError("kernel_spectrum: rho must be > 0");
  LaguerreSpectrum out;
  out.n = n;
  out.lambda = grid.nodes;
  out.weight = grid.weights;
  out.coeffs.resize(grid.nodes.size());
  const double log_pref = (n + 1.0) * std::log(kPi) - (n + 2.0 * s + 1.0) * std::log(2.0) -
                          2.0 * log_gamma(0.5 * (n + 1.0 + s));
  const double target = 0.5 * (-std::log(eps) + 10.0);
  for (std::size_t i = 0; i < grid.nodes.size(); ++i) {
    const double lam = grid.nodes[i];
    const double z = 0.5 * rho * rho * lam;
    const double want = target * target / z + 2.0 * target / std::sqrt(z) + 50.0;
    const int K = static_cast<int>(std::min<double>(k_cap, want));
    std::vector<double> w = confluent_sequence(n, s, z, K);
    if (K < want) out.tail_bound = std::max(out.tail_bound, std::abs(w.back() / w.front()));
    const double front = std::exp(log_pref + s * std::log(lam) - 0.5 * z);
    for (double& v : w) v *= front;
    out.coeffs[i] = std::move(w);
  }
  return out;
}

LaguerreSpectrum transform_spectrum(int n, const BiRadialFunction& f, const LambdaGrid& grid,
                                    int count, const TransformOptions& opt) {
  LaguerreSpectrum out;
  out.n = n;
  out.lambda = grid.nodes;
  out.weight = grid.weights;
  for (double lam : grid.nodes) {
    out.coeffs.push_back(laguerre_transform_all(n, f, lam, count, opt));
    const auto& c = out.coeffs.back();
    double big = 0.0;
    for (double v : c) big = std::max(big, std::abs(v));
    if (big > 0.0) out.tail_bound = std::max(out.tail_bound, std::abs(c.back()) / big);
  }
  return out;
}

LaguerreSpectrum apply_multiplier(const LaguerreSpectrum& f, const SpectralMultiplier& m) {
  LaguerreSpectrum out = f;
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t k = 0; k < f.coeffs[i].size(); ++k) {
      out.coeffs[i][k] *= m(static_cast<int>(k), f.lambda[i]);
    }
  }
  return out;
}

LaguerreSpectrum apply_Ls_spectral(const LaguerreSpectrum& f, double s) {
  f.validate();
  LaguerreSpectrum out = apply_multiplier(f, [&](int k, double lam) {
    return ls_multiplier(f.n, k, lam, s);
  });
  double growth = 1.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const std::size_t K = f.coeffs[i].size();
    if (K < 2) continue;
    growth = std::max(growth, std::abs(ls_multiplier(f.n, static_cast<int>(K) - 1, f.lambda[i], s) /
                                       ls_multiplier(f.n, 0, f.lambda[i], s)));
  }
  out.tail_bound = f.tail_bound * growth;
  if (out.tail_bound > 1e-3) throw DomainError("apply_Ls_spectral: multiplied spectrum is not summable");
  return out;
}

double inverse_transform(const LaguerreSpectrum& F, double r, double t) {
  const int n = F.n;
  double total = 0.0;
  for (std::size_t i = 0; i < F.size(); ++i) {
    const auto& c = F.coeffs[i];
    if (c.empty()) continue;
    const double lam = F.lambda[i];
    std::vector<double> phis = laguerre_functions(n, lam, r, static_cast<int>(c.size()));
    double sum = 0.0;
    for (std::size_t k = 0; k < c.size(); ++k) sum += c[k] * phis[k];
    total += F.weight[i] * std::cos(lam * t) * std::pow(lam, n) * sum;
  }
  return 2.0 * std::pow(2.0 * kPi, -n - 1.0) * total;
}

double inverse_transform(const LaguerreSpectrum& F, const Point& x) {
  if (x.v.size() != 2 * F.n || x.z.size() != 1) {
    throw DomainError("inverse_transform: point must lie in H^n");
  }
  return inverse_transform(F, x.v.norm(), x.z(0));
}

double spectral_inner(const LaguerreSpectrum& f, const LaguerreSpectrum& g) {
  if (f.n != g.n || f.lambda != g.lambda) {
    throw DomainError("spectral_inner: spectra live on different grids");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const std::size_t K = std::min(f.coeffs[i].size(), g.coeffs[i].size());
    double sum = 0.0;
    for (std::size_t k = 0; k < K; ++k) {
      sum += plancherel_weight(f.n, static_cast<int>(k), f.lambda[i]) * f.coeffs[i][k] *
             g.coeffs[i][k];
    }
    total += f.weight[i] * sum;
  }
  return total;
}

std::vector<double> confluent_sequence(int n, double s, double z, int count,
                                       const QuadratureConfig& cfg) {
  if (n < 1 || count < 1) throw DomainError("confluent_sequence: need n >= 1 and count >= 1");
  if (!(z > 0.0)) throw DomainError("confluent_sequence: z must be > 0");
  if (!(n + 1.0 + s > 0.0) || !(s < n + 1.0)) {
    throw DomainError("confluent_sequence: requires |s| < n + 1");
  }
  const QuadratureConfig qc = cfg.with_rel_tol(std::min(cfg.rel_tol, 1e-12));
  auto quad = [&](int k) {
    const double b = b_index(n, k, s);
    return std::exp(0.5 * z + log_l_function(0.5 * z, b, b - s, qc));
  };
  std::vector<double> w(count);
  w[0] = quad(0);
  if (count == 1) return w;
  if (count * z <= 9.0) {
    w[1] = quad(1);
    for (int k = 1; k + 1 < count; ++k) {
      const double A = b_index(n, k, s);
      w[k + 1] = ((2.0 * A + z - 1.0 - s) * w[k] - (A - 1.0) * w[k - 1]) / (A - s);
    }
    return w;
  }
  // Ratios r_k = w_k / w_{k-1} from far above, where w_N / w_{N-1} is negligible.
  const double root = std::sqrt(count * z) + 20.0;
  const long N = count + static_cast<long>(std::ceil(root * root / z - count * 1.0 + 20.0));
  std::vector<double> ratio(count, 0.0);
  double next = 0.0;
  for (long k = std::max<long>(N, count); k >= 1; --k) {
    const double A = b_index(n, static_cast<int>(std::min<long>(k, 2147483647L)), s);
    const double r = (A - 1.0) / (2.0 * A + z - 1.0 - s - (A - s) * next);
    if (k < count) ratio[k] = r;
    next = r;
  }
  for (int k = 1; k < count; ++k) w[k] = w[k - 1] * ratio[k];
  return w;
}

std::vector<double> extension_multipliers(int n, double s, double lambda, double rho, int count,
                                          int order, const QuadratureConfig& cfg) {
  require_lambda(lambda, "extension_multipliers");
  if (!(rho > 0.0)) throw DomainError("extension_multipliers: rho must be > 0");
  if (!(s > 0.0)) throw DomainError("extension_multipliers: requires s > 0");
  if (order < 0) throw DomainError("extension_multipliers: order must be >= 0");
  const double z = 0.5 * rho * rho * lambda;
  std::vector<double> w = confluent_sequence(n, s, z, count + order, cfg);
  const double front = std::exp(-0.5 * z - log_gamma(s)) * std::pow(0.5 * lambda, order);
  std::vector<double> out(count);
  // d/dz of z^{s-p} e^{-z/2} w_{k+j}, using z w_k' = (b_k - s) w_{k+1} - b_k w_k,
  // tracked as coefficients c[j][p].
  const int P = order + 1;
  std::vector<double> c(P * P), nc(P * P);
  std::vector<double> zp(P);
  for (int p = 0; p < P; ++p) zp[p] = std::pow(z, s - p);
  for (int k = 0; k < count; ++k) {
    std::fill(c.begin(), c.end(), 0.0);
    c[0] = 1.0;
    for (int step = 0; step < order; ++step) {
      std::fill(nc.begin(), nc.end(), 0.0);
      for (int j = 0; j <= step; ++j) {
        const double bj = b_index(n, k + j, s);
        for (int p = 0; p <= step; ++p) {
          const double v = c[j * P + p];
          if (v == 0.0) continue;
          nc[j * P + p + 1] += v * (s - p - bj);
          nc[j * P + p] -= 0.5 * v;
          nc[(j + 1) * P + p + 1] += v * (bj - s);
        }
      }
      std::swap(c, nc);
    }
    double sum = 0.0;
    for (int j = 0; j <= order; ++j) {
      for (int p = 0; p <= order; ++p) {
        if (c[j * P + p] != 0.0) sum += c[j * P + p] * zp[p] * w[k + j];
      }
    }
    out[k] = front * sum;
  }
  return out;
}

LaguerreSpectrum extension_spectrum(const LaguerreSpectrum& f, double s, double rho, int order,
                                    const QuadratureConfig& cfg) {
  LaguerreSpectrum out = f;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const int K = static_cast<int>(f.coeffs[i].size());
    if (K == 0) continue;
    std::vector<double> m = extension_multipliers(f.n, s, f.lambda[i], rho, K, order, cfg);
    for (int k = 0; k < K; ++k) out.coeffs[i][k] *= m[k];
  }
  return out;
}

}  // namespace hext
