// Copyright 2026 The hext Authors.
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy at
// http://www.apache.org/licenses/LICENSE-2.0

#include <gtest/gtest.h>

#include <random>

#include "hext/group.hpp"
#include "hext/special_math.hpp"

namespace hext {
namespace {

Point random_point(const GroupParams& g, std::mt19937_64& rng) {
  std::normal_distribution<double> d;
  Point p{Eigen::VectorXd(g.dim_v()), Eigen::VectorXd(g.m())};
  for (int i = 0; i < g.dim_v(); ++i) p.v(i) = d(rng);
  for (int i = 0; i < g.m(); ++i) p.z(i) = d(rng);
  return p;
}

double distance(const Point& a, const Point& b) {
  return (a.v - b.v).norm() + (a.z - b.z).norm();
}

std::vector<GroupParams> groups() { return {heisenberg(1), heisenberg(3), quaternionic(1), quaternionic(2)}; }

TEST(Group, StructureRelations) {
  for (const GroupParams& g : groups()) {
    EXPECT_LT(g.structure_defect(), 1e-14);
    EXPECT_EQ(g.Q(), 2 * (g.n() + g.m()));
  }
  EXPECT_EQ(quaternionic(1).m(), 3);
  Eigen::MatrixXd bad = Eigen::MatrixXd::Identity(2, 2);
  EXPECT_THROW(GroupParams(1, 1, {bad}), DomainError);
}

TEST(Group, AssociativityInverseAndIdentity) {
  std::mt19937_64 rng(7);
  for (const GroupParams& g : groups()) {
    const Point e{Eigen::VectorXd::Zero(g.dim_v()), Eigen::VectorXd::Zero(g.m())};
    for (int trial = 0; trial < 20; ++trial) {
      const Point x = random_point(g, rng), y = random_point(g, rng), w = random_point(g, rng);
      EXPECT_LT(distance(group_mul(g, group_mul(g, x, y), w), group_mul(g, x, group_mul(g, y, w))),
                1e-12);
      EXPECT_LT(distance(group_mul(g, x, group_inverse(x)), e), 1e-14);
      EXPECT_LT(distance(group_mul(g, e, x), x), 1e-15);
    }
  }
}

TEST(Group, DilationsAreAutomorphisms) {
  std::mt19937_64 rng(11);
  for (const GroupParams& g : groups()) {
    for (int trial = 0; trial < 20; ++trial) {
      const Point x = random_point(g, rng), y = random_point(g, rng);
      const double r = 0.3 + trial * 0.2;
      EXPECT_LT(distance(dilate(g, r, group_mul(g, x, y)),
                         group_mul(g, dilate(g, r, x), dilate(g, r, y))),
                1e-11);
      EXPECT_NEAR(homogeneous_norm(g, dilate(g, r, x)), r * homogeneous_norm(g, x),
                  1e-12 * r * homogeneous_norm(g, x));
    }
  }
}

TEST(Group, NormIsSymmetric) {
  std::mt19937_64 rng(3);
  const GroupParams g = heisenberg(2);
  for (int trial = 0; trial < 20; ++trial) {
    const Point x = random_point(g, rng);
    EXPECT_NEAR(homogeneous_norm(g, group_inverse(x)), homogeneous_norm(g, x), 1e-14);
  }
  // |(v, z)|^4 = |v|^4 + 16 |z|^2.
  const Point x = make_point(g, {1.0, 0.0, 0.0, 0.0}, {0.25});
  EXPECT_NEAR(homogeneous_norm(g, x), std::pow(2.0, 0.25), 1e-15);
  EXPECT_THROW(make_point(g, {1.0}, {0.0}), DomainError);
}

}  // namespace
}  // namespace hext
