// Copyright 2026 The hext Authors.
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <Eigen/Dense>
#include <vector>

namespace hext {

// An H-type group: v in R^{2n}, z in R^m, with structure maps J_1..J_m acting
// on v. The group law is
//   (v, z)(v', z') = (v + v', z + z' + 1/2 (<J_k v, v'>)_k).
class GroupParams {
 public:
  // Validates skew-symmetry and J_i J_j + J_j J_i = -2 delta_ij I.
  GroupParams(int n, int m, std::vector<Eigen::MatrixXd> J);

  int n() const { return n_; }
  int m() const { return m_; }
  int dim_v() const { return 2 * n_; }
  int Q() const { return 2 * (n_ + m_); }
  const std::vector<Eigen::MatrixXd>& J() const { return J_; }

  // Largest deviation from the H-type relations; 0 up to rounding.
  double structure_defect() const;

 private:
  int n_, m_;
  std::vector<Eigen::MatrixXd> J_;
};

// The Heisenberg group H^n with coordinates (x_1, y_1, ..., x_n, y_n, t).
// The centre term is +1/2 Im(v . conj(v')).
GroupParams heisenberg(int n);

// The quaternionic H-type group of dimension 4k + 3 (m = 3).
GroupParams quaternionic(int k);

struct Point {
  Eigen::VectorXd v;
  Eigen::VectorXd z;
};

Point make_point(const GroupParams& g, std::vector<double> v, std::vector<double> z);
Point group_mul(const GroupParams& g, const Point& x, const Point& y);
Point group_inverse(const Point& x);
double homogeneous_norm(const GroupParams& g, const Point& x);
Point dilate(const GroupParams& g, double r, const Point& x);

}  // namespace hext
