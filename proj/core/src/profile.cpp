// Copyright 2026 The hext Authors.
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy at
// http://www.apache.org/licenses/LICENSE-2.0

#include "hext/profile.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <memory>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "hext/special_math.hpp"

namespace hext {
namespace {

void check_grid(const std::vector<double>& g, const char* what) {
  if (g.size() < 2) throw DomainError(std::string(what) + ": need at least two grid points");
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (!(g[i] > 0.0) || !std::isfinite(g[i])) {
      throw DomainError(std::string(what) + ": grid radii must be positive and finite");
    }
    if (i > 0 && !(g[i] > g[i - 1])) {
      throw DomainError(std::string(what) + ": grid must be strictly increasing");
    }
  }
}

// Lagrange weights on up to four neighbouring log-grid nodes around x.
struct Stencil {
  std::size_t first = 0;
  int count = 0;
  double w[4] = {0, 0, 0, 0};
};

Stencil stencil(const std::vector<double>& logs, double lx) {
  const std::size_t n = logs.size();
  std::size_t hi = std::upper_bound(logs.begin(), logs.end(), lx) - logs.begin();
  std::size_t i = hi == 0 ? 0 : hi - 1;
  if (i >= n - 1) i = n - 2;
  Stencil st;
  std::size_t first = i == 0 ? 0 : i - 1;
  std::size_t last = std::min(n - 1, i + 2);
  st.first = first;
  st.count = static_cast<int>(last - first + 1);
  for (int a = 0; a < st.count; ++a) {
    double wa = 1.0;
    for (int b = 0; b < st.count; ++b) {
      if (a == b) continue;
      wa *= (lx - logs[first + b]) / (logs[first + a] - logs[first + b]);
    }
    st.w[a] = wa;
  }
  return st;
}

}  // namespace

BiRadialProfile::BiRadialProfile(int n, int m, std::vector<double> r_grid,
                                 std::vector<double> zeta_grid, std::vector<double> values,
                                 double decay_r, double decay_zeta)
    : n_(n), m_(m), r_(std::move(r_grid)), zeta_(std::move(zeta_grid)),
      values_(std::move(values)), decay_r_(decay_r), decay_zeta_(decay_zeta) {
  if (n < 1 || m < 1) throw DomainError("BiRadialProfile: n and m must be >= 1");
  check_grid(r_, "BiRadialProfile r_grid");
  check_grid(zeta_, "BiRadialProfile zeta_grid");
  if (values_.size() != r_.size() * zeta_.size()) {
    throw DomainError("BiRadialProfile: values must have r_grid.size() * zeta_grid.size() entries");
  }
  for (double v : values_) {
    if (!std::isfinite(v)) throw DomainError("BiRadialProfile: values must be finite");
  }
  if (decay_r_ < 0.0 || decay_zeta_ < 0.0) throw DomainError("BiRadialProfile: decay must be >= 0");
  for (double x : r_) log_r_.push_back(std::log(x));
  for (double x : zeta_) log_zeta_.push_back(std::log(x));
}

std::vector<double> BiRadialProfile::log_grid(double lo, double hi, int count) {
  if (!(lo > 0.0) || !(hi > lo) || count < 2) throw DomainError("log_grid: need 0 < lo < hi, count >= 2");
  std::vector<double> g(count);
  const double a = std::log(lo), b = std::log(hi);
  for (int i = 0; i < count; ++i) g[i] = std::exp(a + (b - a) * i / (count - 1));
  g.front() = lo;
  g.back() = hi;
  return g;
}

BiRadialProfile BiRadialProfile::sample(int n, int m, const BiRadialFunction& f,
                                        std::vector<double> r_grid, std::vector<double> zeta_grid,
                                        double decay_r, double decay_zeta) {
  std::vector<double> values;
  values.reserve(r_grid.size() * zeta_grid.size());
  for (double r : r_grid) {
    for (double z : zeta_grid) values.push_back(f(r, z));
  }
  return BiRadialProfile(n, m, std::move(r_grid), std::move(zeta_grid), std::move(values), decay_r,
                         decay_zeta);
}

double BiRadialProfile::operator()(double r, double zeta) const {
  r = std::abs(r);
  zeta = std::abs(zeta);
  double factor = 1.0;
  if (r > r_.back()) {
    if (decay_r_ == 0.0) return 0.0;
    factor *= std::pow(r_.back() / r, decay_r_);
    r = r_.back();
  }
  if (zeta > zeta_.back()) {
    if (decay_zeta_ == 0.0) return 0.0;
    factor *= std::pow(zeta_.back() / zeta, decay_zeta_);
    zeta = zeta_.back();
  }
  r = std::max(r, r_.front());
  zeta = std::max(zeta, zeta_.front());

  Stencil sr = stencil(log_r_, std::log(r));
  Stencil sz = stencil(log_zeta_, std::log(zeta));
  double acc = 0.0;
  for (int a = 0; a < sr.count; ++a) {
    double row = 0.0;
    for (int b = 0; b < sz.count; ++b) row += sz.w[b] * value_at(sr.first + a, sz.first + b);
    acc += sr.w[a] * row;
  }
  return factor * acc;
}

BiRadialFunction BiRadialProfile::as_function(double scale) const {
  auto self = std::make_shared<BiRadialProfile>(*this);
  return {[self](double r, double z) { return (*self)(r, z); }, scale, "profile"};
}

void BiRadialProfile::write(std::ostream& os) const {
  nlohmann::json header = {{"n", n_},           {"m", m_},
                           {"r_grid", r_},      {"zeta_grid", zeta_},
                           {"decay_r", decay_r_}, {"decay_zeta", decay_zeta_}};
  os << header.dump() << "\n";
  os << "r,zeta,value\n";
  os.precision(17);
  for (std::size_t i = 0; i < r_.size(); ++i) {
    for (std::size_t j = 0; j < zeta_.size(); ++j) {
      os << r_[i] << "," << zeta_[j] << "," << value_at(i, j) << "\n";
    }
  }
}

BiRadialProfile BiRadialProfile::read(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw DomainError("BiRadialProfile::read: missing JSON header");
  nlohmann::json header;
  try {
    header = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("BiRadialProfile::read: bad header: ") + e.what());
  }
  auto r = header.at("r_grid").get<std::vector<double>>();
  auto z = header.at("zeta_grid").get<std::vector<double>>();
  std::vector<double> values(r.size() * z.size(), 0.0);
  std::vector<bool> seen(values.size(), false);
  std::getline(is, line);
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    double ri, zj, v;
    char c1, c2;
    if (!(row >> ri >> c1 >> zj >> c2 >> v)) throw DomainError("BiRadialProfile::read: bad row: " + line);
    auto i = std::lower_bound(r.begin(), r.end(), ri * (1 - 1e-12)) - r.begin();
    auto j = std::lower_bound(z.begin(), z.end(), zj * (1 - 1e-12)) - z.begin();
    if (i >= static_cast<long>(r.size()) || j >= static_cast<long>(z.size()) ||
        std::abs(r[i] - ri) > 1e-12 * ri || std::abs(z[j] - zj) > 1e-12 * zj) {
      throw DomainError("BiRadialProfile::read: row off the declared grid: " + line);
    }
    values[i * z.size() + j] = v;
    seen[i * z.size() + j] = true;
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw DomainError("BiRadialProfile::read: missing grid values");
  }
  return BiRadialProfile(header.at("n").get<int>(), header.at("m").get<int>(), r, z, values,
                         header.value("decay_r", 0.0), header.value("decay_zeta", 0.0));
}

}  // namespace hext
