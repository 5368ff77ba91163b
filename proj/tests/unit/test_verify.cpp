#include <gtest/gtest.h>

#include <thread>

#include "curvcheck/error.hpp"
#include "curvcheck/problems/cube.hpp"
#include "curvcheck/problems/generator.hpp"
#include "curvcheck/sosc/verify.hpp"

using namespace curvcheck;
using sosc::Method;
using sosc::Status;

namespace {

sosc::Problem simple(const Eigen::MatrixXd& H, const Eigen::MatrixXd& A) {
  return sosc::Problem(linalg::ConstraintJacobian(A), linalg::HessianOperator::dense(H));
}

}  // namespace

TEST(Verify, CholeskyOnIdentity) {
  Eigen::MatrixXd A(1, 3);
  A << 0, 0, 1;
  const auto v = sosc::verify(simple(Eigen::MatrixXd::Identity(3, 3), A), Method::Cholesky);
  EXPECT_EQ(v.status, Status::Holds);
  EXPECT_EQ(v.diagnostics.operator_products, 2u);
  EXPECT_GE(v.diagnostics.wall_time_s, 0.0);
}

TEST(Verify, ProblemDimensionsMustAgree) {
  EXPECT_THROW(simple(Eigen::MatrixXd::Identity(3, 3), Eigen::MatrixXd::Ones(1, 4)), Error);
}

TEST(Verify, AllMethodsAgreeOnGeneratedProblem) {
  for (Eigen::Index P : {3, 9}) {
    problems::GeneratorSpec spec;
    spec.N = 12;
    spec.M = 4;
    spec.P = P;
    spec.seed = 17;
    const auto p = problems::generate(spec);
    for (auto m : sosc::kAllMethods) {
      const auto v = sosc::verify(p, m);
      EXPECT_EQ(v.holds(), *p.truth) << sosc::to_string(m) << " P=" << P;
    }
  }
}

TEST(Verify, RankDeficientIsReportedForHessianFreeMethods) {
  Eigen::MatrixXd A(2, 3);
  A << 1, 1, 0, 2, 2, 0;
  const auto p = simple(Eigen::MatrixXd::Identity(3, 3), A);
  for (auto m : {Method::Cholesky, Method::Diagonalization, Method::Pcg}) {
    const auto v = sosc::verify(p, m);
    EXPECT_EQ(v.status, Status::Error);
    EXPECT_EQ(v.reason, sosc::ErrorReason::RankDeficient);
  }
}

TEST(Verify, CubeLimitIsNotHolds) {
  const auto p = problems::cube_limit_problem();
  for (auto m : sosc::kAllMethods) {
    const auto v = sosc::verify(p, m);
    EXPECT_NE(v.status, Status::Holds) << sosc::to_string(m);
  }
  EXPECT_EQ(sosc::verify(p, Method::Cholesky).reason, sosc::ErrorReason::SemiDefiniteBoundary);
  EXPECT_EQ(sosc::verify(p, Method::Diagonalization).reason, sosc::ErrorReason::SemiDefiniteBoundary);
}

TEST(Verify, ProductsAreCountedPerCall) {
  problems::GeneratorSpec spec;
  spec.N = 10;
  spec.M = 3;
  spec.P = 10;
  const auto p = problems::generate(spec);
  const auto a = sosc::verify(p, Method::Cholesky);
  const auto b = sosc::verify(p, Method::Cholesky);
  EXPECT_EQ(a.diagnostics.operator_products, 7u);
  EXPECT_EQ(b.diagnostics.operator_products, 7u);
  EXPECT_EQ(p.H.product_count(), 0u);
}

TEST(Verify, OperatorOnlyProblemIsMaterializedForClassicalTests) {
  Eigen::MatrixXd A(1, 3);
  A << 1, 0, 0;
  auto H = linalg::HessianOperator::callback(3, [](const Eigen::VectorXd& s) { return Eigen::VectorXd(2 * s); });
  const sosc::Problem p(linalg::ConstraintJacobian(A), H);
  const auto v = sosc::verify(p, Method::Inertia);
  EXPECT_EQ(v.status, Status::Holds);
  EXPECT_EQ(v.diagnostics.operator_products, 3u);
}

TEST(Verify, ExactBasisOption) {
  problems::GeneratorSpec spec;
  spec.N = 30;
  spec.M = 10;
  spec.P = 25;
  spec.conditioning = problems::Conditioning::IllConditioned;
  spec.seed = 3;
  const auto p = problems::generate(spec);
  sosc::VerifyOptions o;
  o.use_exact_basis = true;
  EXPECT_EQ(sosc::verify(p, Method::Cholesky, o).status, Status::Holds);
  EXPECT_EQ(sosc::verify(p, Method::Diagonalization, o).status, Status::Holds);
}

TEST(Verify, ConcurrentCallsOnOneProblem) {
  problems::GeneratorSpec spec;
  spec.N = 30;
  spec.M = 10;
  spec.P = 5;
  const auto p = problems::generate(spec);
  std::vector<sosc::SoscVerdict> out(4);
  std::vector<std::thread> threads;
  for (int t = 0; t < 4; ++t) threads.emplace_back([&, t] { out[static_cast<std::size_t>(t)] = sosc::verify(p, Method::Diagonalization); });
  for (auto& th : threads) th.join();
  for (const auto& v : out) {
    EXPECT_EQ(v.status, Status::Fails);
    EXPECT_EQ(v.diagnostics.operator_products, out[0].diagnostics.operator_products);
  }
}

TEST(Verify, MethodNames) {
  for (auto m : sosc::kAllMethods) EXPECT_EQ(sosc::method_from_string(sosc::to_string(m)), m);
  EXPECT_EQ(sosc::method_from_string("diagonalization"), Method::Diagonalization);
  EXPECT_FALSE(sosc::method_from_string("svd"));
  EXPECT_TRUE(sosc::is_hessian_free(Method::Pcg));
  EXPECT_FALSE(sosc::is_hessian_free(Method::BorderedHessian));
}

TEST(Verdict, StatusAndReasonNames) {
  EXPECT_EQ(sosc::to_string(Status::Fails), "Fails");
  EXPECT_EQ(sosc::to_string(sosc::ErrorReason::SubspaceExhausted), "SubspaceExhausted");
}
