#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "curvcheck/error.hpp"
#include "curvcheck/linalg/projector.hpp"
#include "support/oracles.hpp"

using curvcheck::Error;
using curvcheck::ErrorCode;
using curvcheck::linalg::Projector;

TEST(Projector, CoordinateConstraint) {
  Eigen::MatrixXd A(1, 2);
  A << 1, 0;
  const Projector p(A);
  EXPECT_TRUE(p.project(Eigen::Vector2d(3, 4)).isApprox(Eigen::Vector2d(0, 4)));
  EXPECT_EQ(p.free_dimension(), 1);
}

TEST(Projector, DiagonalConstraint) {
  Eigen::MatrixXd A(1, 2);
  A << 1, 1;
  A /= std::sqrt(2.0);
  const Projector p(A);
  const Eigen::VectorXd r = p.project(Eigen::Vector2d(1, 0));
  EXPECT_NEAR(r(0), 0.5, 1e-15);
  EXPECT_NEAR(r(1), -0.5, 1e-15);
}

TEST(Projector, VectorInNullSpaceIsUnchanged) {
  Eigen::MatrixXd A(1, 3);
  A << 1, 2, 3;
  const Projector p(A);
  const Eigen::Vector3d r(3, 0, -1);
  EXPECT_LE((p.project(r) - r).norm(), 1e-14 * r.norm());
}

TEST(Projector, IdentityThenAppend) {
  auto p = Projector::identity(3);
  EXPECT_EQ(p.constraints(), 0);
  p.append_column(Eigen::Vector3d(1, 0, 0));
  EXPECT_LE(p.project(Eigen::Vector3d(1, 0, 0)).norm(), 1e-15);
  EXPECT_EQ(p.appended(), 1);
  EXPECT_EQ(p.free_dimension(), 2);
}

TEST(Projector, AppendToConstrained) {
  Eigen::MatrixXd A(1, 3);
  A << 0, 0, 1;
  Projector p(A);
  p.append_column(Eigen::Vector3d(1, 0, 0));
  EXPECT_TRUE(p.project(Eigen::Vector3d(1, 1, 0)).isApprox(Eigen::Vector3d(0, 1, 0)));
}

TEST(Projector, DependentAppendThrows) {
  Eigen::MatrixXd A(1, 3);
  A << 0, 0, 1;
  Projector p(A);
  try {
    p.append_column(Eigen::Vector3d(0, 0, 5));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DependentColumn);
  }
  EXPECT_EQ(p.appended(), 0);
}

TEST(Projector, WithColumnLeavesOriginal) {
  const auto p = Projector::identity(2);
  const auto q = p.with_column(Eigen::Vector2d(0, 1));
  EXPECT_EQ(p.free_dimension(), 2);
  EXPECT_EQ(q.free_dimension(), 1);
}

TEST(Projector, RankDeficientThrows) {
  Eigen::MatrixXd A(2, 3);
  A << 1, 1, 1, 2, 2, 2;
  EXPECT_THROW(Projector{A}, Error);
}

TEST(Projector, IdempotentAndAnnihilatesAfterAppends) {
  std::mt19937_64 eng(21);
  const Eigen::MatrixXd A = oracles::gaussian(5, 20, eng);
  Projector p(A);
  std::vector<Eigen::VectorXd> appended;
  for (int k = 0; k < 6; ++k) {
    Eigen::VectorXd q = oracles::gaussian(20, 1, eng);
    p.append_column(q);
    appended.push_back(q);
  }
  for (int t = 0; t < 10; ++t) {
    const Eigen::VectorXd r = oracles::gaussian(20, 1, eng);
    const Eigen::VectorXd pr = p.project(r);
    EXPECT_LE((p.project(pr) - pr).norm(), 1e-13 * r.norm());
    EXPECT_LE((A * pr).cwiseAbs().maxCoeff(), 1e-13 * r.norm() * A.norm());
    for (const auto& q : appended) EXPECT_LE(std::abs(q.dot(pr)), 1e-13 * r.norm() * q.norm());
  }
}
