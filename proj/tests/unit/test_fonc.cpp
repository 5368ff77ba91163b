#include <gtest/gtest.h>

#include <cmath>

#include "curvcheck/error.hpp"
#include "curvcheck/problems/thomson.hpp"
#include "curvcheck/stationary/fonc.hpp"

using namespace curvcheck;
using stationary::fonc_residual;

namespace {

problems::NlpFunctions half_norm_with_first_coordinate() {
  problems::NlpFunctions fn;
  fn.objective = [](const Eigen::VectorXd& x) { return 0.5 * x.squaredNorm(); };
  fn.gradient = [](const Eigen::VectorXd& x) { return x; };
  fn.constraints = [](const Eigen::VectorXd& x) { return Eigen::VectorXd::Constant(1, x(0)); };
  fn.jacobian = [](const Eigen::VectorXd& x) {
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(1, x.size());
    J(0, 0) = 1;
    return J;
  };
  return fn;
}

Eigen::VectorXd antipodal() {
  Eigen::VectorXd x(6);
  x << 1, 0, 0, -1, 0, 0;
  return x;
}

}  // namespace

TEST(FoncResidual, QuadraticAtOrigin) {
  const auto r = fonc_residual(half_norm_with_first_coordinate(), Eigen::VectorXd::Zero(3), Eigen::VectorXd::Zero(1));
  EXPECT_EQ(r.stationarity, 0.0);
  EXPECT_EQ(r.feasibility, 0.0);
}

TEST(FoncResidual, ThomsonAntipodal) {
  const problems::Thomson t(2);
  Eigen::VectorXd lambda(5);
  lambda << -0.25, -0.25, 0, 0, 0;
  const auto r = fonc_residual(t.functions(), antipodal(), lambda);
  EXPECT_LE(r.stationarity, 1e-12);
  EXPECT_LE(r.feasibility, 1e-12);
}

TEST(FoncResidual, GrowsLinearlyUnderPerturbation) {
  const problems::Thomson t(2);
  Eigen::VectorXd lambda(5);
  lambda << -0.25, -0.25, 0, 0, 0;
  Eigen::VectorXd dir(6);
  dir << 0, 0, 0, 0, 1, 0;
  const double r1 = fonc_residual(t.functions(), antipodal() + 1e-4 * dir, lambda).stationarity;
  const double r2 = fonc_residual(t.functions(), antipodal() + 2e-4 * dir, lambda).stationarity;
  EXPECT_GT(r1, 0);
  EXPECT_NEAR(r2 / r1, 2.0, 1e-3);
}

TEST(FoncResidual, Errors) {
  auto fn = half_norm_with_first_coordinate();
  EXPECT_THROW(fonc_residual(fn, Eigen::VectorXd::Zero(3), Eigen::VectorXd::Zero(2)), Error);
  fn.gradient = [](const Eigen::VectorXd&) -> Eigen::VectorXd { throw std::runtime_error("boom"); };
  try {
    fonc_residual(fn, Eigen::VectorXd::Zero(3), Eigen::VectorXd::Zero(1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EvaluationFailure);
  }
  fn = half_norm_with_first_coordinate();
  fn.gradient = [](const Eigen::VectorXd& x) { return Eigen::VectorXd::Constant(x.size(), NAN); };
  EXPECT_THROW(fonc_residual(fn, Eigen::VectorXd::Zero(3), Eigen::VectorXd::Zero(1)), Error);
}

TEST(LeastSquaresMultipliers, SatisfiesNormalEquations) {
  std::srand(4);
  const Eigen::MatrixXd A = Eigen::MatrixXd::Random(4, 9);
  const Eigen::VectorXd g = Eigen::VectorXd::Random(9);
  const Eigen::VectorXd lambda = stationary::least_squares_multipliers(A, g);
  EXPECT_LE((A * (g - A.transpose() * lambda)).norm(), 1e-12);
}

TEST(CanonicalFrame, PlacesFirstTwoPoints) {
  std::srand(9);
  Eigen::VectorXd x = Eigen::VectorXd::Random(12);
  for (int k = 0; k < 4; ++k) x.segment<3>(3 * k).normalize();
  const Eigen::VectorXd y = stationary::canonical_frame(x);
  EXPECT_GT(y(0), 0);
  EXPECT_EQ(y(1), 0.0);
  EXPECT_EQ(y(2), 0.0);
  EXPECT_EQ(y(5), 0.0);
  // A rotation keeps all pairwise distances.
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b)
      EXPECT_NEAR((y.segment<3>(3 * a) - y.segment<3>(3 * b)).norm(),
                  (x.segment<3>(3 * a) - x.segment<3>(3 * b)).norm(), 1e-13);
}

struct SolveCase {
  int K;
  double energy;
  double tol;
};

class SolveThomson : public ::testing::TestWithParam<SolveCase> {};

TEST_P(SolveThomson, ReachesKnownMinimum) {
  const auto c = GetParam();
  const auto pt = stationary::solve_thomson(c.K, 7);
  EXPECT_NEAR(pt.energy, c.energy, c.tol);
  EXPECT_LE(pt.fonc_residual, 1e-10);
  EXPECT_LE(pt.feas_residual, 1e-12);
  const problems::Thomson t(c.K);
  const auto r = fonc_residual(t.functions(), pt.x, pt.lambda);
  EXPECT_LE(r.stationarity, 1e-10);
  EXPECT_LE(r.feasibility, 1e-12);
}

INSTANTIATE_TEST_SUITE_P(SmallK, SolveThomson,
                         ::testing::Values(SolveCase{2, 0.5, 1e-8}, SolveCase{3, std::sqrt(3.0), 1e-6},
                                           SolveCase{4, 6.0 / std::sqrt(8.0 / 3.0), 1e-5}));

TEST(SolveThomsonPoint, AntipodalMultipliers) {
  const auto pt = stationary::solve_thomson(2, 1);
  EXPECT_NEAR((pt.x.segment<3>(0) + pt.x.segment<3>(3)).norm(), 0.0, 1e-8);
  EXPECT_NEAR(pt.lambda(0), -0.25, 1e-8);
  EXPECT_NEAR(pt.lambda(1), -0.25, 1e-8);
}

TEST(SolveThomsonPoint, ErrorsAndBudget) {
  EXPECT_THROW(stationary::solve_thomson(1, 1), Error);
  stationary::ThomsonSolveOptions o;
  o.max_iterations = 2;
  try {
    stationary::solve_thomson(8, 1, o);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MaxIterations);
  }
}
