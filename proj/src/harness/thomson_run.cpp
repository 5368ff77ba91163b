#include "curvcheck/harness/thomson_run.hpp"

#include "curvcheck/error.hpp"
#include "curvcheck/problems/thomson.hpp"

namespace curvcheck::harness {

void run_thomson(const ThomsonConfig& config, const std::function<void(const ThomsonRecord&)>& sink) {
  for (const int K : config.k_list) {
    const problems::Thomson thomson(K, problems::ThomsonVariant::OrthogonallyInvariant);
    ThomsonRecord base;
    base.K = K;
    base.N = thomson.variables();
    base.M = thomson.constraints();

    std::optional<stationary::FoncPoint> point;
    try {
      point = stationary::solve_thomson(K, derive_seed(config.seed, static_cast<std::uint64_t>(K)), config.solve);
    } catch (const Error& e) {
      base.solver_error = e.what();
    }
    if (!point) {
      for (const auto m : config.methods) {
        ThomsonRecord r = base;
        r.method = m;
        sink(r);
      }
      continue;
    }
    base.energy = point->energy;
    base.fonc_residual = point->fonc_residual;

    const sosc::Problem problem = thomson.sosc_problem(point->x, point->lambda, false, config.fd_sigma);
    sosc::VerifyOptions opts = config.options;
    opts.seed = derive_seed(config.seed, 1000 + static_cast<std::uint64_t>(K));
    for (const auto m : config.methods) {
      const auto v = sosc::verify(problem, m, opts);
      ThomsonRecord r = base;
      r.method = m;
      r.status = v.status;
      r.reason = v.reason;
      r.wall_time_s = v.diagnostics.wall_time_s;
      r.operator_products = v.diagnostics.operator_products;
      r.continuations = v.diagnostics.continuations;
      if (v.status != sosc::Status::Holds) r.fail_step = v.step;
      sink(r);
    }
  }
}

}  // namespace curvcheck::harness
