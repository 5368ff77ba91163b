#include "curvcheck/harness/bench.hpp"

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <string>
#include <thread>

namespace curvcheck::harness {

std::size_t default_thread_count() {
  if (const char* env = std::getenv("CURVCHECK_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<TrialRecord> run_trial(const problems::GeneratorSpec& spec, const std::vector<sosc::Method>& methods,
                                   const sosc::VerifyOptions& options, Eigen::Index repeat_timing_from,
                                   const TrialInspector& inspect) {
  const sosc::Problem problem = problems::generate(spec);
  sosc::VerifyOptions opts = options;
  // Restart vectors need their own stream: reusing spec.seed replays the
  // Gaussian draws that built H's eigenvectors.
  opts.seed = derive_seed(spec.seed, 0x5043);

  std::vector<TrialRecord> out;
  out.reserve(methods.size());
  for (const sosc::Method m : methods) {
    sosc::SoscVerdict v = sosc::verify(problem, m, opts);
    double t = v.diagnostics.wall_time_s;
    if (spec.N >= repeat_timing_from) {
      std::vector<double> times{t};
      for (int rep = 0; rep < 2; ++rep) times.push_back(sosc::verify(problem, m, opts).diagnostics.wall_time_s);
      std::sort(times.begin(), times.end());
      t = times[1];
    }
    if (inspect) inspect(problem, m, v);

    TrialRecord r;
    r.seed = spec.seed;
    r.N = spec.N;
    r.M = spec.M;
    r.P = spec.P;
    r.conditioning = spec.conditioning;
    r.method = m;
    r.status = v.status;
    r.reason = v.reason;
    r.truth = problem.truth;
    r.wall_time_s = t;
    r.operator_products = v.diagnostics.operator_products;
    r.continuations = v.diagnostics.continuations;
    if (v.status != sosc::Status::Holds) r.fail_step = v.step;
    out.push_back(r);
  }
  return out;
}

void run_bench(const BenchConfig& config, const std::function<void(const TrialRecord&)>& sink,
               const TrialInspector& inspect) {
  const std::size_t per_n = config.trials_per_n;
  const std::size_t total = per_n * config.n_list.size();
  const std::size_t threads = config.threads ? config.threads : default_thread_count();

  std::function<std::vector<TrialRecord>(std::size_t)> job = [&](std::size_t i) {
    const Eigen::Index N = config.n_list[i / per_n];
    const auto spec = problems::random_spec(N, config.conditioning, derive_seed(config.seed, static_cast<std::uint64_t>(N)),
                                            i % per_n);
    return run_trial(spec, config.methods, config.options, config.repeat_timing_from, inspect);
  };
  std::function<void(std::size_t, std::vector<TrialRecord>&&)> collect = [&](std::size_t,
                                                                              std::vector<TrialRecord>&& rows) {
    for (const auto& r : rows) sink(r);
  };
  // The inspector may run on several workers at once; callers synchronize it.
  run_ordered(total, threads, job, collect);
}

void BenchSummary::add(const std::vector<TrialRecord>& trial) {
  const TrialRecord* inertia = nullptr;
  for (const auto& r : trial)
    if (r.method == sosc::Method::Inertia) inertia = &r;

  for (const auto& r : trial) {
    for (Eigen::Index key : {r.N, Eigen::Index{0}}) {
      MethodStats& s = stats_[{key, r.method}];
      ++s.trials;
      if (r.truth) {
        if (*r.truth) {
          ++s.truth_holds;
          if (r.continuations > 0) ++s.continued;
        } else {
          ++s.truth_fails;
        }
      }
      if (r.false_positive()) ++s.false_positives;
      if (r.false_negative()) ++s.false_negatives;
      if (r.status == sosc::Status::Error) ++s.errors;
      if (inertia && inertia->wall_time_s > 0) s.time_ratio_vs_inertia.push_back(r.wall_time_s / inertia->wall_time_s);
    }
  }
}

const MethodStats* BenchSummary::find(Eigen::Index N, sosc::Method m) const {
  auto it = stats_.find({N, m});
  return it == stats_.end() ? nullptr : &it->second;
}

namespace {

double median(std::vector<double> v) {
  if (v.empty()) return 0.0;
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : (v[n / 2 - 1] + v[n / 2]) / 2;
}

}  // namespace

void BenchSummary::print(std::ostream& out) const {
  out << std::left << std::setw(6) << "N" << std::setw(10) << "method" << std::right << std::setw(8) << "trials"
      << std::setw(10) << "FP rate" << std::setw(10) << "FN rate" << std::setw(8) << "errors" << std::setw(12)
      << "continued" << std::setw(14) << "time/inertia" << '\n';
  const auto old_flags = out.flags();
  const auto old_precision = out.precision();
  out << std::fixed << std::setprecision(3);
  for (const auto& [key, s] : stats_) {
    const auto [N, m] = key;
    out << std::left << std::setw(6) << (N == 0 ? std::string("all") : std::to_string(N)) << std::setw(10)
        << sosc::to_string(m) << std::right << std::setw(8) << s.trials << std::setw(10) << s.fp_rate()
        << std::setw(10) << s.fn_rate() << std::setw(8) << s.errors << std::setw(12);
    if (m == sosc::Method::Pcg) {
      out << s.continued_fraction();
    } else {
      out << "-";
    }
    out << std::setw(14) << median(s.time_ratio_vs_inertia) << '\n';
  }
  out.flags(old_flags);
  out.precision(old_precision);
  out << "FP rate = false positives / (truth fails); FN rate = false negatives / (truth holds);\n"
         "continued = PCG trials with truth holds that needed at least one continuation;\n"
         "time/inertia = median over trials of wall time relative to the inertia test.\n";
}

}  // namespace curvcheck::harness
