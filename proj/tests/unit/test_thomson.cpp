#include <gtest/gtest.h>

#include <cmath>

#include "curvcheck/error.hpp"
#include "curvcheck/problems/thomson.hpp"
#include "curvcheck/sosc/verify.hpp"

using namespace curvcheck;
using problems::Thomson;

namespace {

Eigen::VectorXd stack(std::initializer_list<Eigen::Vector3d> pts) {
  Eigen::VectorXd x(3 * static_cast<Eigen::Index>(pts.size()));
  Eigen::Index i = 0;
  for (const auto& p : pts) x.segment<3>(3 * i++) = p;
  return x;
}

Eigen::VectorXd tetrahedron() {
  const double s = 1.0 / std::sqrt(3.0);
  return stack({{s, s, s}, {s, -s, -s}, {-s, s, -s}, {-s, -s, s}});
}

Eigen::VectorXd random_points(int K, unsigned seed) {
  std::srand(seed);
  Eigen::VectorXd x = Eigen::VectorXd::Random(3 * K);
  for (int k = 0; k < K; ++k) x.segment<3>(3 * k).normalize();
  return x;
}

}  // namespace

TEST(Thomson, ClosedFormEnergies) {
  EXPECT_DOUBLE_EQ(Thomson(2).energy(stack({{1, 0, 0}, {-1, 0, 0}})), 0.5);
  const double c = std::cos(2 * M_PI / 3), s = std::sin(2 * M_PI / 3);
  EXPECT_NEAR(Thomson(3).energy(stack({{1, 0, 0}, {c, s, 0}, {c, -s, 0}})), std::sqrt(3.0), 1e-14);
  EXPECT_NEAR(Thomson(4).energy(tetrahedron()), 6.0 / std::sqrt(8.0 / 3.0), 1e-14);
  EXPECT_NEAR(problems::thomson_reference_energy(4), 6.0 * std::sqrt(3.0 / 8.0), 1e-15);
}

TEST(Thomson, GradientMatchesCentralDifferences) {
  const Thomson t(5);
  const Eigen::VectorXd x = random_points(5, 3);
  const Eigen::VectorXd g = t.gradient(x);
  const double h = 1e-6;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    Eigen::VectorXd xp = x, xm = x;
    xp(i) += h;
    xm(i) -= h;
    const double fd = (t.energy(xp) - t.energy(xm)) / (2 * h);
    EXPECT_NEAR(fd, g(i), 1e-6 * std::max(1.0, std::abs(g(i))));
  }
}

TEST(Thomson, HessianMatchesGradientDifferences) {
  const Thomson t(4);
  const Eigen::VectorXd x = random_points(4, 8);
  const Eigen::MatrixXd H = t.energy_hessian(x);
  const double h = 1e-6;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    Eigen::VectorXd xp = x, xm = x;
    xp(i) += h;
    xm(i) -= h;
    const Eigen::VectorXd col = (t.gradient(xp) - t.gradient(xm)) / (2 * h);
    EXPECT_LE((col - H.col(i)).norm(), 1e-6 * std::max(1.0, H.col(i).norm()));
  }
}

TEST(Thomson, ConstraintsAndJacobian) {
  const Thomson t(3);
  EXPECT_EQ(t.constraints(), 6);
  EXPECT_EQ(Thomson(3, problems::ThomsonVariant::Plain).constraints(), 3);
  const Eigen::VectorXd x = stack({{2, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  const Eigen::VectorXd c = t.constraint_values(x);
  EXPECT_DOUBLE_EQ(c(0), 1.5);  // ||x_1||^2/2 - 1/2
  EXPECT_DOUBLE_EQ(c(1), 0.0);
  EXPECT_DOUBLE_EQ(c(3), 0.0);  // x_1 second coordinate
  const Eigen::MatrixXd J = t.jacobian(x);
  EXPECT_EQ(J.rows(), 6);
  EXPECT_DOUBLE_EQ(J(0, 0), 2.0);
  EXPECT_DOUBLE_EQ(J(3, 1), 1.0);
  EXPECT_DOUBLE_EQ(J(4, 2), 1.0);
  EXPECT_DOUBLE_EQ(J(5, 5), 1.0);
}

TEST(Thomson, AntipodalFonc) {
  const Thomson t(2);
  const Eigen::VectorXd x = stack({{1, 0, 0}, {-1, 0, 0}});
  Eigen::VectorXd lambda(5);
  lambda << -0.25, -0.25, 0, 0, 0;
  EXPECT_LE(t.lagrangian_gradient(x, lambda).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Thomson, FdProductMatchesAnalytic) {
  const Thomson t(2);
  const Eigen::VectorXd x = stack({{1, 0, 0}, {-1, 0, 0}});
  Eigen::VectorXd lambda(5);
  lambda << -0.25, -0.25, 0, 0, 0;
  const auto fd = t.sosc_problem(x, lambda, false, 1e-6);
  const Eigen::MatrixXd H = t.lagrangian_hessian(x, lambda);
  EXPECT_TRUE(fd.H.is_finite_difference());
  const Eigen::VectorXd s = random_points(2, 4).normalized();
  EXPECT_LE((fd.H.apply(s) - H * s).norm(), 1e-5 * (H * s).norm());
}

TEST(Thomson, AnalyticSoscAtTetrahedronFrame) {
  // Rotate the tetrahedron so x_1 = e_1 and x_2 lies in the (1, 2)-plane.
  const Thomson t(4);
  Eigen::VectorXd x = tetrahedron();
  Eigen::Matrix3d Q;
  Q.row(0) = x.segment<3>(0).normalized();
  Eigen::Vector3d b = x.segment<3>(3) - Q.row(0).transpose() * Q.row(0).dot(x.segment<3>(3));
  Q.row(1) = b.normalized();
  Q.row(2) = Q.row(0).cross(Q.row(1));
  for (int k = 0; k < 4; ++k) x.segment<3>(3 * k) = Q * x.segment<3>(3 * k);
  const Eigen::MatrixXd A = t.jacobian(x);
  const Eigen::VectorXd lambda = A.transpose().colPivHouseholderQr().solve(t.gradient(x));
  ASSERT_LE(t.lagrangian_gradient(x, lambda).cwiseAbs().maxCoeff(), 1e-12);
  const auto p = t.sosc_problem(x, lambda, true);
  EXPECT_EQ(sosc::verify(p, sosc::Method::Cholesky).status, sosc::Status::Holds);
  EXPECT_EQ(sosc::verify(p, sosc::Method::Inertia).status, sosc::Status::Holds);
}

TEST(Thomson, Errors) {
  EXPECT_THROW(Thomson(1), Error);
  const Thomson t(2);
  try {
    t.energy(stack({{1, 0, 0}, {1, 0, 0}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::CoincidentPoints);
  }
  EXPECT_THROW(t.gradient(Eigen::VectorXd::Zero(5)), Error);
}
