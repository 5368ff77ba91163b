#include <gtest/gtest.h>

#include <random>

#include "curvcheck/error.hpp"
#include "curvcheck/linalg/hessian_operator.hpp"
#include "curvcheck/problems/thomson.hpp"

using curvcheck::Error;
using curvcheck::ErrorCode;
using curvcheck::linalg::HessianOperator;

TEST(HessianOperator, DenseIdentityReturnsInput) {
  const auto H = HessianOperator::dense(Eigen::MatrixXd::Identity(3, 3));
  const Eigen::Vector3d s(1, 2, 3);
  EXPECT_EQ(H.apply(s), Eigen::VectorXd(s));
  EXPECT_EQ(H.product_count(), 1u);
}

TEST(HessianOperator, DenseIsSymmetrized) {
  Eigen::MatrixXd A(2, 2);
  A << 1, 4, 0, 3;
  const auto H = HessianOperator::dense(A);
  ASSERT_NE(H.dense_matrix(), nullptr);
  EXPECT_DOUBLE_EQ((*H.dense_matrix())(0, 1), 2.0);
  EXPECT_DOUBLE_EQ((*H.dense_matrix())(1, 0), 2.0);
}

TEST(HessianOperator, RejectsTinyOrNonSquare) {
  EXPECT_THROW(HessianOperator::dense(Eigen::MatrixXd::Identity(1, 1)), Error);
  EXPECT_THROW(HessianOperator::dense(Eigen::MatrixXd::Zero(2, 3)), Error);
}

TEST(HessianOperator, DimensionMismatchThrows) {
  const auto H = HessianOperator::dense(Eigen::MatrixXd::Identity(3, 3));
  try {
    H.apply(Eigen::VectorXd::Ones(4));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DimensionMismatch);
  }
}

TEST(HessianOperator, BlockApplyCountsColumns) {
  const auto H = HessianOperator::dense(Eigen::MatrixXd::Identity(4, 4));
  const Eigen::MatrixXd S = Eigen::MatrixXd::Random(4, 3);
  EXPECT_TRUE(H.apply_block(S).isApprox(S));
  EXPECT_EQ(H.product_count(), 3u);
  H.reset_count();
  EXPECT_EQ(H.product_count(), 0u);
}

TEST(HessianOperator, CopyKeepsCountButCountsIndependently) {
  const auto H = HessianOperator::dense(Eigen::MatrixXd::Identity(2, 2));
  H.apply(Eigen::VectorXd::Ones(2));
  const HessianOperator G = H;
  EXPECT_EQ(G.product_count(), 1u);
  G.apply(Eigen::VectorXd::Ones(2));
  EXPECT_EQ(G.product_count(), 2u);
  EXPECT_EQ(H.product_count(), 1u);
}

TEST(HessianOperator, CallbackIsUsedAsGiven) {
  const auto H = HessianOperator::callback(3, [](const Eigen::VectorXd& s) { Eigen::VectorXd r = 2 * s; return r; });
  EXPECT_TRUE(H.apply(Eigen::Vector3d(1, 0, -1)).isApprox(Eigen::Vector3d(2, 0, -2)));
  EXPECT_TRUE(H.materialize().isApprox(2 * Eigen::MatrixXd::Identity(3, 3)));
  EXPECT_EQ(H.product_count(), 4u);
}

TEST(HessianOperator, FiniteDifferenceExactOnLinearGradient) {
  auto grad = [](const Eigen::VectorXd& x) { return x; };
  const Eigen::Vector3d x(0.3, -2.0, 5.0);
  const auto H = HessianOperator::finite_difference(grad, x, 1e-6);
  const Eigen::VectorXd r = H.apply(Eigen::Vector3d(0, 1, 0));
  EXPECT_NEAR(r(0), 0.0, 1e-9);
  EXPECT_NEAR(r(1), 1.0, 1e-9);
  EXPECT_NEAR(r(2), 0.0, 1e-9);
}

TEST(HessianOperator, FiniteDifferenceDefaultStep) {
  auto grad = [](const Eigen::VectorXd& x) { return x; };
  const Eigen::Vector3d x(0.0, -4.0, 1.0);
  const auto H = HessianOperator::finite_difference(grad, x);
  EXPECT_TRUE(H.is_finite_difference());
  EXPECT_DOUBLE_EQ(H.fd_step(), 1e-6 * 5.0);
}

TEST(HessianOperator, FiniteDifferenceRejectsZeroDirection) {
  auto grad = [](const Eigen::VectorXd& x) { return x; };
  const auto H = HessianOperator::finite_difference(grad, Eigen::Vector3d::Zero());
  try {
    H.apply(Eigen::Vector3d::Zero());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroDirection);
  }
}

TEST(HessianOperator, FiniteDifferenceScalesWithDirectionNorm) {
  // Quadratic with a non-identity Hessian: FD of its linear gradient is exact
  // up to rounding, for any length of s.
  Eigen::Matrix3d Q;
  Q << 4, 1, 0, 1, 3, -1, 0, -1, 2;
  auto grad = [Q](const Eigen::VectorXd& x) { return Eigen::VectorXd(Q * x); };
  const auto H = HessianOperator::finite_difference(grad, Eigen::Vector3d(1, 1, 1));
  const Eigen::Vector3d s(0.5, -2, 7);
  for (double alpha : {1e-3, 1.0, 1e3}) {
    const Eigen::VectorXd r = H.apply(alpha * s);
    EXPECT_LE((r - alpha * Q * s).norm(), 1e-8 * alpha * (Q * s).norm());
  }
}

TEST(HessianOperator, FiniteDifferenceMatchesThomsonAnalyticHessian) {
  const curvcheck::problems::Thomson t(2);
  Eigen::VectorXd x(6);
  x << 1, 0, 0, -1, 0, 0;
  Eigen::VectorXd lambda(5);
  lambda << -0.25, -0.25, 0, 0, 0;
  const auto fd = HessianOperator::finite_difference(
      [&](const Eigen::VectorXd& y) { return t.lagrangian_gradient(y, lambda); }, x, 1e-6);
  const Eigen::MatrixXd Hx = t.lagrangian_hessian(x, lambda);
  std::mt19937_64 eng(7);
  std::normal_distribution<double> nd;
  for (int trial = 0; trial < 5; ++trial) {
    Eigen::VectorXd s(6);
    for (auto& v : s) v = nd(eng);
    s.normalize();
    const Eigen::VectorXd exact = Hx * s;
    EXPECT_LE((fd.apply(s) - exact).norm(), 1e-5 * exact.norm());
  }
}
