#pragma once

// Brute-force references used only by tests. They share no code with the
// library's factorizations.

#include <cmath>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace oracles {

inline Eigen::VectorXd eigenvalues(const Eigen::MatrixXd& S) {
  return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(S, Eigen::EigenvaluesOnly).eigenvalues();
}

/// Smallest eigenvalue of W^T H W.
inline double reduced_lambda_min(const Eigen::MatrixXd& H, const Eigen::MatrixXd& W) {
  return eigenvalues(W.transpose() * H * W).minCoeff();
}

struct Counts {
  Eigen::Index pos = 0, neg = 0, zero = 0;
};

inline Counts sign_counts(const Eigen::VectorXd& eig, double zero_tol) {
  Counts c;
  for (Eigen::Index i = 0; i < eig.size(); ++i) {
    if (eig(i) > zero_tol) ++c.pos;
    else if (eig(i) < -zero_tol) ++c.neg;
    else ++c.zero;
  }
  return c;
}

/// sign(det(X)) from Eigen's partial-pivot LU: product of the pivot signs
/// times the permutation parity. Avoids overflow of det itself.
inline int det_sign(const Eigen::MatrixXd& X) {
  const Eigen::PartialPivLU<Eigen::MatrixXd> lu(X);
  int s = lu.permutationP().determinant() > 0 ? 1 : -1;
  for (Eigen::Index i = 0; i < X.rows(); ++i) {
    const double d = lu.matrixLU()(i, i);
    if (d == 0) return 0;
    if (d < 0) s = -s;
  }
  return s;
}

/// "Naive" bordered Hessian test: one fresh LU per leading minor B_i of
/// order 2M + i, i = 1..L.
inline std::vector<int> naive_bht_signs(const Eigen::MatrixXd& B, Eigen::Index M, Eigen::Index L) {
  std::vector<int> out;
  for (Eigen::Index i = 1; i <= L; ++i) {
    const Eigen::Index n = 2 * M + i;
    out.push_back(det_sign(B.topLeftCorner(n, n)));
  }
  return out;
}

/// Largest principal angle (radians) between the column spans of X and Y,
/// from the sine ||(I - Qx Qx^T) Qy||_2 (acos of the cosine loses half the digits).
inline double max_principal_angle(const Eigen::MatrixXd& X, const Eigen::MatrixXd& Y) {
  const Eigen::MatrixXd Qx = Eigen::HouseholderQR<Eigen::MatrixXd>(X).householderQ() * Eigen::MatrixXd::Identity(X.rows(), X.cols());
  const Eigen::MatrixXd Qy = Eigen::HouseholderQR<Eigen::MatrixXd>(Y).householderQ() * Eigen::MatrixXd::Identity(Y.rows(), Y.cols());
  const Eigen::MatrixXd R = Qy - Qx * (Qx.transpose() * Qy);
  const double s = Eigen::JacobiSVD<Eigen::MatrixXd>(R).singularValues()(0);
  return std::asin(std::min(1.0, s));
}

/// Random matrix with N(0, 1) entries, column-major fill, from a std engine.
template <class Engine>
Eigen::MatrixXd gaussian(Eigen::Index r, Eigen::Index c, Engine& eng) {
  std::normal_distribution<double> nd;
  Eigen::MatrixXd X(r, c);
  for (Eigen::Index j = 0; j < c; ++j)
    for (Eigen::Index i = 0; i < r; ++i) X(i, j) = nd(eng);
  return X;
}

}  // namespace oracles
