#include "curvcheck/linalg/ldl.hpp"

#include <cmath>
#include <numeric>

#include "curvcheck/error.hpp"

namespace curvcheck::linalg {

std::ostream& operator<<(std::ostream& os, const Inertia& in) {
  return os << "(" << in.positive << "," << in.negative << "," << in.zero << ")";
}

namespace {

void add_sign(Inertia& in, double value) {
  if (value > 0) {
    ++in.positive;
  } else if (value < 0) {
    ++in.negative;
  } else {
    ++in.zero;
  }
}

void add_block_inertia(Inertia& in, double d11, double d21, double d22) {
  const double det = d11 * d22 - d21 * d21;
  const double trace = d11 + d22;
  if (det < 0) {
    ++in.positive;
    ++in.negative;
  } else if (det > 0) {
    add_sign(in, trace);
    add_sign(in, trace);
  } else {
    add_sign(in, 0.0);
    add_sign(in, trace);
  }
}

}  // namespace

LdlFactorization ldl_factor(const Eigen::MatrixXd& K) {
  if (K.rows() != K.cols()) throw Error(ErrorCode::DimensionMismatch, "LDL needs a square matrix");
  const Eigen::Index n = K.rows();
  const double alpha = (1.0 + std::sqrt(17.0)) / 8.0;

  Eigen::MatrixXd A = K.triangularView<Eigen::Lower>();
  LdlFactorization f;
  f.perm.resize(static_cast<std::size_t>(n));
  std::iota(f.perm.begin(), f.perm.end(), Eigen::Index{0});
  f.diag = Eigen::VectorXd::Zero(n);
  f.offdiag = Eigen::VectorXd::Zero(std::max<Eigen::Index>(n - 1, 0));

  Eigen::VectorXd l1(n), l2(n);
  Eigen::Index k = 0;
  while (k < n) {
    int kstep = 1;
    Eigen::Index kp = k;
    const double absakk = std::abs(A(k, k));
    Eigen::Index imax = k;
    double colmax = 0.0;
    if (k + 1 < n) {
      colmax = A.col(k).tail(n - k - 1).cwiseAbs().maxCoeff(&imax);
      imax += k + 1;
    }

    if (std::max(absakk, colmax) == 0.0) {
      // Column already zero: a zero 1x1 pivot, nothing to eliminate.
      f.diag(k) = 0.0;
      f.block_size.push_back(1);
      ++f.inertia.zero;
      ++k;
      continue;
    }

    if (absakk < alpha * colmax) {
      double rowmax = 0.0;
      for (Eigen::Index j = k; j < imax; ++j) rowmax = std::max(rowmax, std::abs(A(imax, j)));
      for (Eigen::Index j = imax + 1; j < n; ++j) rowmax = std::max(rowmax, std::abs(A(j, imax)));
      if (absakk >= alpha * colmax * (colmax / rowmax)) {
        kp = k;
      } else if (std::abs(A(imax, imax)) >= alpha * rowmax) {
        kp = imax;
      } else {
        kp = imax;
        kstep = 2;
      }
    }

    const Eigen::Index kk = k + kstep - 1;
    if (kp != kk) {
      // Symmetric interchange of kk and kp (kp > kk) in the lower triangle,
      // plus the matching row swap in the columns already eliminated.
      for (Eigen::Index i = kp + 1; i < n; ++i) std::swap(A(i, kk), A(i, kp));
      for (Eigen::Index j = kk + 1; j < kp; ++j) std::swap(A(j, kk), A(kp, j));
      std::swap(A(kk, kk), A(kp, kp));
      for (Eigen::Index j = 0; j < kk; ++j) std::swap(A(kk, j), A(kp, j));
      std::swap(f.perm[static_cast<std::size_t>(kk)], f.perm[static_cast<std::size_t>(kp)]);
    }

    if (kstep == 1) {
      const double d = A(k, k);
      f.diag(k) = d;
      add_sign(f.inertia, d);
      if (d != 0.0) {
        for (Eigen::Index j = k + 1; j < n; ++j) {
          const double c = A(j, k) / d;
          A.col(j).tail(n - j) -= c * A.col(k).tail(n - j);
        }
        A.col(k).tail(n - k - 1) /= d;
      }
      f.block_size.push_back(1);
    } else {
      const double d11 = A(k, k);
      const double d21 = A(k + 1, k);
      const double d22 = A(k + 1, k + 1);
      const double det = d11 * d22 - d21 * d21;
      for (Eigen::Index i = k + 2; i < n; ++i) {
        const double c1 = A(i, k);
        const double c2 = A(i, k + 1);
        l1(i) = (d22 * c1 - d21 * c2) / det;
        l2(i) = (d11 * c2 - d21 * c1) / det;
      }
      for (Eigen::Index j = k + 2; j < n; ++j) {
        A.col(j).tail(n - j) -= l1(j) * A.col(k).tail(n - j) + l2(j) * A.col(k + 1).tail(n - j);
      }
      for (Eigen::Index i = k + 2; i < n; ++i) {
        A(i, k) = l1(i);
        A(i, k + 1) = l2(i);
      }
      f.diag(k) = d11;
      f.diag(k + 1) = d22;
      f.offdiag(k) = d21;
      A(k + 1, k) = 0.0;
      add_block_inertia(f.inertia, d11, d21, d22);
      f.block_size.push_back(2);
    }
    k += kstep;
  }

  f.L = A.triangularView<Eigen::StrictlyLower>();
  f.L.diagonal().setOnes();
  return f;
}

Eigen::MatrixXd LdlFactorization::block_diagonal() const {
  const Eigen::Index n = diag.size();
  Eigen::MatrixXd D = Eigen::MatrixXd::Zero(n, n);
  D.diagonal() = diag;
  for (Eigen::Index i = 0; i + 1 < n; ++i) {
    D(i + 1, i) = offdiag(i);
    D(i, i + 1) = offdiag(i);
  }
  return D;
}

Eigen::MatrixXd LdlFactorization::permutation_matrix() const {
  const Eigen::Index n = diag.size();
  Eigen::MatrixXd P = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) P(i, perm[static_cast<std::size_t>(i)]) = 1.0;
  return P;
}

Eigen::MatrixXd LdlFactorization::reconstruct() const {
  const Eigen::MatrixXd P = permutation_matrix();
  return P.transpose() * L * block_diagonal() * L.transpose() * P;
}

}  // namespace curvcheck::linalg
