#include <cmath>
#include <string>

#include "curvcheck/error.hpp"
#include "curvcheck/rng.hpp"
#include "curvcheck/sosc/methods.hpp"

namespace curvcheck::sosc {

namespace {

// A nonzero vector of the current subspace, or nullopt once no draw survives
// projection.
std::optional<Eigen::VectorXd> draw_rhs(const linalg::Projector& proj, Rng& rng, const PcgOptions& options,
                                        const Eigen::VectorXd* start) {
  const Eigen::Index n = proj.dimension();
  if (start != nullptr) {
    Eigen::VectorXd b = proj.project(*start);
    if (b.norm() > options.tol * start->norm()) return b;
  }
  for (int attempt = 0; attempt < options.max_draws; ++attempt) {
    Eigen::VectorXd g(n);
    for (Eigen::Index i = 0; i < n; ++i) g(i) = rng.normal();
    Eigen::VectorXd b = proj.project(g);
    if (b.norm() > options.tol * g.norm()) return b;
  }
  return std::nullopt;
}

}  // namespace

SoscVerdict continued_pcg(const linalg::HessianOperator& H, linalg::Projector proj, const PcgOptions& options,
                          PcgTrace* trace) {
  if (proj.dimension() != H.dimension()) throw Error(ErrorCode::DimensionMismatch, "projector size");
  if (!(options.tol > 0)) throw Error(ErrorCode::InvalidArgument, "PCG tolerance must be positive");

  const std::size_t L = static_cast<std::size_t>(proj.free_dimension());
  Rng rng(options.seed);
  std::size_t conjugated = 0;
  std::size_t continuations = 0;

  const Eigen::VectorXd* start = options.start ? &*options.start : nullptr;
  std::optional<Eigen::VectorXd> b = draw_rhs(proj, rng, options, start);

  while (true) {
    if (!b) {
      auto v = SoscVerdict::make_error(ErrorReason::SubspaceExhausted,
                                       "no restart vector after " + std::to_string(conjugated) + " of " +
                                           std::to_string(L) + " directions",
                                       conjugated);
      v.diagnostics.continuations = continuations;
      return v;
    }
    if (trace) trace->sweeps.emplace_back();

    Eigen::VectorXd r = *b / b->norm();
    Eigen::VectorXd s = proj.project(r);
    double omega = r.dot(s);
    Eigen::VectorXd p = s;
    std::vector<Eigen::VectorXd> sweep_products;

    for (std::size_t j = conjugated + 1; j <= L; ++j) {
      const double tau = omega;
      Eigen::VectorXd q = H.apply(p);
      const double eta = p.dot(q);
      if (!(std::abs(eta) > options.tol_alpha * p.norm() * q.norm())) {
        auto v = SoscVerdict::make_error(ErrorReason::SemiDefiniteBoundary,
                                         "search direction " + std::to_string(j) + " has zero curvature", j);
        v.diagnostics.continuations = continuations;
        return v;
      }
      if (eta < 0) {
        SoscVerdict v;
        v.status = Status::Fails;
        v.direction = std::move(p);
        v.curvature = eta;
        v.step = j;
        v.diagnostics.continuations = continuations;
        return v;
      }
      if (trace) {
        trace->sweeps.back().directions.push_back(p);
        trace->sweeps.back().products.push_back(q);
      }
      conjugated = j;
      // No iterate update: only the curvature along each p matters here.
      r -= (tau / eta) * q;
      s = proj.project(r);
      omega = r.dot(s);
      sweep_products.push_back(std::move(q));
      if (std::abs(omega) <= options.tol) break;
      p = s + (omega / tau) * p;
    }

    if (conjugated >= L) {
      auto v = SoscVerdict::make_holds();
      v.step = conjugated;
      v.diagnostics.continuations = continuations;
      return v;
    }

    // Early convergence: continue in C ∩ span{H p_j of this sweep}^⊥.
    for (const auto& q : sweep_products) {
      try {
        proj.append_column(q);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::DependentColumn) throw;
        // Already orthogonal to the current subspace; nothing to restrict.
      }
    }
    ++continuations;
    b = draw_rhs(proj, rng, options, nullptr);
  }
}

}  // namespace curvcheck::sosc
