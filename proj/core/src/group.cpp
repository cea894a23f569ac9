// Copyright 2026 The hext Authors.
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy at
// http://www.apache.org/licenses/LICENSE-2.0

#include "hext/group.hpp"

#include <cmath>
#include <string>

#include "hext/special_math.hpp"

namespace hext {

GroupParams::GroupParams(int n, int m, std::vector<Eigen::MatrixXd> J)
    : n_(n), m_(m), J_(std::move(J)) {
  if (n < 1) throw DomainError("GroupParams: n must be >= 1");
  if (m < 1) throw DomainError("GroupParams: m must be >= 1");
  if (static_cast<int>(J_.size()) != m) throw DomainError("GroupParams: need exactly m maps J_k");
  for (const auto& Jk : J_) {
    if (Jk.rows() != 2 * n || Jk.cols() != 2 * n) {
      throw DomainError("GroupParams: each J_k must be 2n x 2n");
    }
  }
  double defect = structure_defect();
  if (defect > 1e-12) {
    throw DomainError("GroupParams: J maps violate the H-type relations (defect " +
                      std::to_string(defect) + ")");
  }
}

double GroupParams::structure_defect() const {
  const int d = 2 * n_;
  const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(d, d);
  double worst = 0.0;
  for (int i = 0; i < m_; ++i) {
    worst = std::max(worst, (J_[i] + J_[i].transpose()).cwiseAbs().maxCoeff());
    for (int j = i; j < m_; ++j) {
      Eigen::MatrixXd anti = J_[i] * J_[j] + J_[j] * J_[i];
      if (i == j) anti += 2.0 * I;
      worst = std::max(worst, anti.cwiseAbs().maxCoeff());
    }
  }
  return worst;
}

GroupParams heisenberg(int n) {
  if (n < 1) throw DomainError("heisenberg: n must be >= 1");
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  for (int j = 0; j < n; ++j) {
    // (Jv)_{x_j} = y_j, (Jv)_{y_j} = -x_j gives <Jv, v'> = Im(v . conj(v')).
    J(2 * j, 2 * j + 1) = 1.0;
    J(2 * j + 1, 2 * j) = -1.0;
  }
  return GroupParams(n, 1, {J});
}

GroupParams quaternionic(int k) {
  if (k < 1) throw DomainError("quaternionic: k must be >= 1");
  // Right multiplication by i, j, k on H^k = R^{4k}.
  Eigen::Matrix4d qi, qj, qk;
  qi << 0, -1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, -1, 0;
  qj << 0, 0, -1, 0, 0, 0, 0, -1, 1, 0, 0, 0, 0, 1, 0, 0;
  qk << 0, 0, 0, -1, 0, 0, 1, 0, 0, -1, 0, 0, 1, 0, 0, 0;
  std::vector<Eigen::MatrixXd> J(3, Eigen::MatrixXd::Zero(4 * k, 4 * k));
  for (int b = 0; b < k; ++b) {
    J[0].block<4, 4>(4 * b, 4 * b) = qi;
    J[1].block<4, 4>(4 * b, 4 * b) = qj;
    J[2].block<4, 4>(4 * b, 4 * b) = qk;
  }
  return GroupParams(2 * k, 3, J);
}

Point make_point(const GroupParams& g, std::vector<double> v, std::vector<double> z) {
  if (static_cast<int>(v.size()) != g.dim_v() || static_cast<int>(z.size()) != g.m()) {
    throw DomainError("make_point: dimension mismatch with group");
  }
  Point p{Eigen::Map<Eigen::VectorXd>(v.data(), v.size()),
          Eigen::Map<Eigen::VectorXd>(z.data(), z.size())};
  return p;
}

namespace {
void check_dims(const GroupParams& g, const Point& x) {
  if (x.v.size() != g.dim_v() || x.z.size() != g.m()) {
    throw DomainError("point dimension does not match its group");
  }
}
}  // namespace

Point group_mul(const GroupParams& g, const Point& x, const Point& y) {
  check_dims(g, x);
  check_dims(g, y);
  Point r{x.v + y.v, x.z + y.z};
  for (int k = 0; k < g.m(); ++k) r.z(k) += 0.5 * (g.J()[k] * x.v).dot(y.v);
  return r;
}

Point group_inverse(const Point& x) { return {-x.v, -x.z}; }

double homogeneous_norm(const GroupParams& g, const Point& x) {
  check_dims(g, x);
  double v2 = x.v.squaredNorm();
  return std::pow(v2 * v2 + 16.0 * x.z.squaredNorm(), 0.25);
}

Point dilate(const GroupParams& g, double r, const Point& x) {
  check_dims(g, x);
  if (!(r > 0.0)) throw DomainError("dilate: r must be > 0");
  return {r * x.v, r * r * x.z};
}

}  // namespace hext
