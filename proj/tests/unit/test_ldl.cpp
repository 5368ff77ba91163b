#include <gtest/gtest.h>

#include <random>

#include "curvcheck/linalg/ldl.hpp"
#include "support/oracles.hpp"

using curvcheck::linalg::Inertia;
using curvcheck::linalg::ldl_factor;

TEST(Ldl, DiagonalInertia) {
  Eigen::MatrixXd K = Eigen::Vector2d(1, -1).asDiagonal();
  EXPECT_EQ(ldl_factor(K).inertia, (Inertia{1, 1, 0}));
}

TEST(Ldl, KktOfIdentityHessian) {
  Eigen::MatrixXd K(3, 3);
  K << 1, 0, 1, 0, 1, 0, 1, 0, 0;
  EXPECT_EQ(ldl_factor(K).inertia, (Inertia{2, 1, 0}));
}

TEST(Ldl, KktOfIndefiniteHessian) {
  Eigen::MatrixXd K(3, 3);
  K << 1, 0, 1, 0, -1, 0, 1, 0, 0;
  EXPECT_EQ(ldl_factor(K).inertia, (Inertia{1, 2, 0}));
}

TEST(Ldl, ZeroMatrixHasZeroInertia) {
  EXPECT_EQ(ldl_factor(Eigen::MatrixXd::Zero(3, 3)).inertia, (Inertia{0, 0, 3}));
}

TEST(Ldl, TwoByTwoPivotForZeroDiagonal) {
  Eigen::MatrixXd K(2, 2);
  K << 0, 1, 1, 0;
  const auto f = ldl_factor(K);
  EXPECT_EQ(f.inertia, (Inertia{1, 1, 0}));
  ASSERT_EQ(f.block_size.size(), 1u);
  EXPECT_EQ(f.block_size[0], 2);
}

TEST(Ldl, ReconstructsRandomIndefinite) {
  std::mt19937_64 eng(41);
  for (int n : {1, 2, 5, 17, 40}) {
    Eigen::MatrixXd K = oracles::gaussian(n, n, eng);
    K = (K + K.transpose()).eval();
    const auto f = ldl_factor(K);
    EXPECT_LE((f.reconstruct() - K).norm(), 1e-12 * K.norm()) << n;
    EXPECT_TRUE(f.L.diagonal().isOnes(0.0));
    EXPECT_TRUE(f.L.triangularView<Eigen::StrictlyUpper>().toDenseMatrix().isZero(0.0));
    const Eigen::MatrixXd P = f.permutation_matrix();
    EXPECT_LE((P * K * P.transpose() - f.L * f.block_diagonal() * f.L.transpose()).norm(), 1e-12 * K.norm());
  }
}

TEST(Ldl, ReadsOnlyLowerTriangle) {
  Eigen::MatrixXd K(2, 2);
  K << 2, 99, 1, 3;
  const auto f = ldl_factor(K);
  Eigen::MatrixXd sym(2, 2);
  sym << 2, 1, 1, 3;
  EXPECT_LE((f.reconstruct() - sym).norm(), 1e-14);
}

TEST(Ldl, StreamsInertia) {
  std::ostringstream os;
  os << Inertia{3, 2, 1};
  EXPECT_EQ(os.str(), "(3,2,1)");
}
