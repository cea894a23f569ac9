// Copyright 2026 The hext Authors.
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "hext/group.hpp"

namespace hext {

// A function of (|v|, |z|) given analytically.
struct BiRadialFunction {
  std::function<double(double r, double zeta)> value;
  // Length of the core region in the homogeneous norm. Zero marks a
  // homogeneous function with a singularity at the identity.
  double scale = 1.0;
  std::string label;

  double operator()(double r, double zeta) const { return value(r, zeta); }
};

// f(|v|, |z|) sampled on a tensor grid of radii. Interpolation is cubic in
// (log r, log zeta); beyond the last grid radius the declared power-law decay
// is used, below the first radius the profile is held constant.
class BiRadialProfile {
 public:
  BiRadialProfile(int n, int m, std::vector<double> r_grid, std::vector<double> zeta_grid,
                  std::vector<double> values, double decay_r = 0.0, double decay_zeta = 0.0);

  static BiRadialProfile sample(int n, int m, const BiRadialFunction& f,
                                std::vector<double> r_grid, std::vector<double> zeta_grid,
                                double decay_r = 0.0, double decay_zeta = 0.0);
  static std::vector<double> log_grid(double lo, double hi, int count);

  int n() const { return n_; }
  int m() const { return m_; }
  const std::vector<double>& r_grid() const { return r_; }
  const std::vector<double>& zeta_grid() const { return zeta_; }
  double value_at(std::size_t i, std::size_t j) const { return values_[i * zeta_.size() + j]; }
  double decay_r() const { return decay_r_; }
  double decay_zeta() const { return decay_zeta_; }

  double operator()(double r, double zeta) const;
  BiRadialFunction as_function(double scale = 1.0) const;

  // JSON header line followed by "r,zeta,value" rows.
  void write(std::ostream& os) const;
  static BiRadialProfile read(std::istream& is);

 private:
  int n_, m_;
  std::vector<double> r_, zeta_, values_;
  std::vector<double> log_r_, log_zeta_;
  double decay_r_, decay_zeta_;
};

}  // namespace hext
