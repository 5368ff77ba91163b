#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <ostream>
#include <vector>

#include "curvcheck/harness/records.hpp"
#include "curvcheck/problems/generator.hpp"
#include "curvcheck/sosc/verify.hpp"

namespace curvcheck::harness {

/// Worker count: CURVCHECK_THREADS if set to a positive integer, else the
/// hardware concurrency (at least 1).
std::size_t default_thread_count();

/// Runs job(i) for i in [0, count) on `threads` workers. Results reach
/// `collect` one at a time and in index order, whatever order the workers
/// finish in.
template <class Result>
void run_ordered(std::size_t count, std::size_t threads, const std::function<Result(std::size_t)>& job,
                 const std::function<void(std::size_t, Result&&)>& collect);

struct BenchConfig {
  std::vector<Eigen::Index> n_list{10};
  std::size_t trials_per_n = 50;
  problems::Conditioning conditioning = problems::Conditioning::WellConditioned;
  std::vector<sosc::Method> methods{std::begin(sosc::kAllMethods), std::end(sosc::kAllMethods)};
  std::uint64_t seed = 1;
  sosc::VerifyOptions options;  // seed is replaced per trial
  std::size_t threads = 0;      // 0: default_thread_count()
  Eigen::Index repeat_timing_from = 500;  // median of 3 timings at and above this N
};

/// Per-trial hook with access to the generated problem and each verdict,
/// for callers that audit more than the record holds (certificates).
using TrialInspector = std::function<void(const sosc::Problem&, sosc::Method, const sosc::SoscVerdict&)>;

/// Generates trials_per_n problems for every N and runs every method on
/// each. Records arrive at `sink` in deterministic order (N, trial, method).
void run_bench(const BenchConfig& config, const std::function<void(const TrialRecord&)>& sink,
               const TrialInspector& inspect = {});

/// Runs the methods on one generated problem.
std::vector<TrialRecord> run_trial(const problems::GeneratorSpec& spec, const std::vector<sosc::Method>& methods,
                                   const sosc::VerifyOptions& options, Eigen::Index repeat_timing_from,
                                   const TrialInspector& inspect = {});

struct MethodStats {
  std::size_t trials = 0;
  std::size_t truth_holds = 0;
  std::size_t truth_fails = 0;
  std::size_t false_positives = 0;
  std::size_t false_negatives = 0;
  std::size_t errors = 0;
  std::size_t continued = 0;  // truth_holds trials with at least one continuation
  std::vector<double> time_ratio_vs_inertia;

  double fp_rate() const { return truth_fails ? static_cast<double>(false_positives) / truth_fails : 0.0; }
  double fn_rate() const { return truth_holds ? static_cast<double>(false_negatives) / truth_holds : 0.0; }
  double continued_fraction() const { return truth_holds ? static_cast<double>(continued) / truth_holds : 0.0; }
};

/// Statistics keyed by (N, method); N = 0 aggregates over all N.
class BenchSummary {
 public:
  void add(const std::vector<TrialRecord>& trial);
  const std::map<std::pair<Eigen::Index, sosc::Method>, MethodStats>& stats() const noexcept { return stats_; }
  const MethodStats* find(Eigen::Index N, sosc::Method m) const;
  void print(std::ostream& out) const;

 private:
  std::map<std::pair<Eigen::Index, sosc::Method>, MethodStats> stats_;
};

}  // namespace curvcheck::harness

#include "curvcheck/harness/pool_impl.hpp"
