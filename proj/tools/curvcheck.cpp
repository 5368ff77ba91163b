#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "curvcheck/error.hpp"
#include "curvcheck/harness/bench.hpp"
#include "curvcheck/harness/compare.hpp"
#include "curvcheck/harness/thomson_run.hpp"
#include "curvcheck/problems/io.hpp"

namespace cc = curvcheck;

namespace {

enum Exit { kHolds = 0, kFails = 1, kInconclusive = 2, kInputError = 3 };

struct TolerancesFlags {
  double tol_alpha = 0.0;
  double tol_rank = 0.0;  // 0: default
  double tol_feas = 1e-8;
  double pcg_tol = 1e-10;
  double tol_pivot = 0.0;
  std::uint64_t seed = 0;
  std::string variant = "modified";
  std::string basis = "qr-at";
  bool exact_basis = false;
};

void add_tolerance_flags(CLI::App* cmd, TolerancesFlags& t, bool with_seed = true) {
  cmd->add_option("--tol-alpha", t.tol_alpha, "Relative zero-curvature threshold")->capture_default_str();
  cmd->add_option("--tol-rank", t.tol_rank, "Rank tolerance for A (0: sqrt(eps)*||A||_F)")->capture_default_str();
  cmd->add_option("--tol-feas", t.tol_feas, "Feasibility tolerance for failure directions")->capture_default_str();
  cmd->add_option("--tol-pcg", t.pcg_tol, "PCG convergence tolerance")->capture_default_str();
  cmd->add_option("--tol-pivot", t.tol_pivot, "Bordered LU zero-pivot tolerance")->capture_default_str();
  if (with_seed) cmd->add_option("--seed", t.seed, "Seed for random restart vectors")->capture_default_str();
  cmd->add_option("--variant", t.variant, "Gram-Schmidt ordering")
      ->check(CLI::IsMember({"modified", "classical"}))
      ->capture_default_str();
  cmd->add_option("--basis", t.basis, "Null-space basis")
      ->check(CLI::IsMember({"svd", "qr-at", "qr-a", "lu-a"}))
      ->capture_default_str();
  cmd->add_flag("--exact-basis", t.exact_basis, "Use the generator's exact basis when the problem has one");
}

cc::sosc::VerifyOptions to_options(const TolerancesFlags& t) {
  cc::sosc::VerifyOptions o;
  o.tol_alpha = t.tol_alpha;
  if (t.tol_rank > 0) o.tol_rank = t.tol_rank;
  o.tol_feas = t.tol_feas;
  o.pcg_tol = t.pcg_tol;
  o.tol_pivot = t.tol_pivot;
  o.seed = t.seed;
  o.variant = t.variant == "classical" ? cc::sosc::Variant::Classical : cc::sosc::Variant::Modified;
  o.basis = *cc::linalg::basis_method_from_string(t.basis);
  o.use_exact_basis = t.exact_basis;
  return o;
}

std::vector<cc::sosc::Method> parse_methods(const std::vector<std::string>& names) {
  std::vector<cc::sosc::Method> out;
  for (const auto& n : names) {
    if (n == "all") return {std::begin(cc::sosc::kAllMethods), std::end(cc::sosc::kAllMethods)};
    auto m = cc::sosc::method_from_string(n);
    if (!m) throw CLI::ValidationError("--methods", "unknown method '" + n + "'");
    out.push_back(*m);
  }
  return out;
}

int cmd_check(const std::string& file, const std::string& method_name, const TolerancesFlags& tol,
              std::string direction_out) {
  std::optional<cc::sosc::Problem> problem;
  try {
    problem.emplace(cc::problems::load_problem(file));
  } catch (const cc::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  const auto method = *cc::sosc::method_from_string(method_name);
  const auto v = cc::sosc::verify(*problem, method, to_options(tol));

  std::cout << "method: " << cc::sosc::to_string(method) << '\n'
            << "verdict: " << cc::sosc::to_string(v.status) << '\n';
  if (v.status == cc::sosc::Status::Error) std::cout << "reason: " << cc::sosc::to_string(v.reason) << '\n';
  if (!v.message.empty()) std::cout << "message: " << v.message << '\n';
  if (v.step) std::cout << "step: " << *v.step << '\n';
  if (v.curvature) std::cout << "curvature: " << cc::harness::format_double(*v.curvature) << '\n';
  std::cout << "operator_products: " << v.diagnostics.operator_products << '\n';
  if (method == cc::sosc::Method::Pcg) std::cout << "continuations: " << v.diagnostics.continuations << '\n';
  if (method == cc::sosc::Method::BorderedHessian) std::cout << "minors: " << v.diagnostics.minors << '\n';
  if (v.diagnostics.inertia) std::cout << "inertia: " << *v.diagnostics.inertia << '\n';
  std::cout << "wall_time_s: " << cc::harness::format_double(v.diagnostics.wall_time_s) << '\n';

  if (v.direction) {
    if (direction_out.empty()) direction_out = file + ".direction.json";
    std::ofstream out(direction_out);
    if (!out) {
      std::cerr << "error: cannot write " << direction_out << '\n';
      return kInputError;
    }
    nlohmann::json doc = {{"direction", std::vector<double>(v.direction->data(), v.direction->data() + v.direction->size())},
                          {"curvature", *v.curvature},
                          {"step", *v.step}};
    out << doc.dump(2) << '\n';
    std::cout << "direction: " << direction_out << '\n';
  }
  switch (v.status) {
    case cc::sosc::Status::Holds: return kHolds;
    case cc::sosc::Status::Fails: return kFails;
    case cc::sosc::Status::Error: return kInconclusive;
  }
  return kInconclusive;
}

std::ostream* open_output(const std::string& path, std::ofstream& file) {
  if (path.empty() || path == "-") return &std::cout;
  file.open(path);
  if (!file) throw cc::Error(cc::ErrorCode::Schema, "cannot write " + path);
  return &file;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Second-order sufficient condition checks for equality-constrained problems"};
  app.require_subcommand(1);

  // check
  std::string check_file;
  std::string check_method = "cholesky";
  std::string direction_out;
  TolerancesFlags check_tol;
  auto* check = app.add_subcommand("check", "Verify the SOSC for one problem file");
  check->add_option("problem", check_file, "Problem JSON (dense-v1)")->required();
  check->add_option("--method", check_method, "cholesky | diag | pcg | bht | inertia")
      ->check(CLI::IsMember({"cholesky", "chol", "diag", "diagonalization", "pcg", "bht", "bordered", "inertia", "ldl"}))
      ->capture_default_str();
  check->add_option("--direction-out", direction_out, "Where to write a negative-curvature direction");
  add_tolerance_flags(check, check_tol);

  // bench
  std::vector<Eigen::Index> n_list{10};
  std::size_t trials_per_n = 50;
  std::string conditioning = "well";
  std::vector<std::string> bench_methods{"all"};
  std::uint64_t bench_seed = 1;
  std::string bench_out;
  std::size_t threads = 0;
  TolerancesFlags bench_tol;
  auto* bench = app.add_subcommand("bench", "Randomized accuracy and timing campaign");
  bench->add_option("--n-list", n_list, "Problem sizes")->delimiter(',')->check(CLI::Range(4, 100000));
  bench->add_option("--trials-per-n", trials_per_n, "Random (M, P) pairs per size")->capture_default_str();
  bench->add_option("--conditioning", conditioning, "well | ill")
      ->check(CLI::IsMember({"well", "ill"}))
      ->capture_default_str();
  bench->add_option("--methods", bench_methods, "Methods to run, or 'all'")->delimiter(',');
  bench->add_option("--seed", bench_seed, "Campaign seed")->capture_default_str();
  bench->add_option("--out", bench_out, "CSV output file ('-' for stdout)");
  bench->add_option("--threads", threads, "Worker count (default: CURVCHECK_THREADS or all cores)");
  add_tolerance_flags(bench, bench_tol, false);  // restart seeds follow the trial seeds

  // thomson
  std::vector<int> k_list{2, 3, 4};
  std::vector<std::string> thomson_methods{"all"};
  double fd_sigma = 0.0;
  std::uint64_t thomson_seed = 1;
  std::string thomson_out;
  auto* thomson = app.add_subcommand("thomson", "Solve Thomson problems and verify the SOSC at the solutions");
  thomson->add_option("--k-list", k_list, "Point counts")->delimiter(',')->check(CLI::Range(2, 1000));
  thomson->add_option("--methods", thomson_methods, "Methods to run, or 'all'")->delimiter(',');
  thomson->add_option("--fd-sigma", fd_sigma, "Finite-difference step (0: 1e-6 (1 + ||x||_inf))")->capture_default_str();
  thomson->add_option("--seed", thomson_seed, "Seed for the starting configurations")->capture_default_str();
  thomson->add_option("--out", thomson_out, "CSV output file ('-' for stdout)");

  // compare
  std::string compare_file;
  TolerancesFlags compare_tol;
  auto* compare = app.add_subcommand("compare", "Run all five methods on one problem");
  compare->add_option("problem", compare_file, "Problem JSON (dense-v1)")->required();
  add_tolerance_flags(compare, compare_tol);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kInputError;
  }

  try {
    if (*check) return cmd_check(check_file, check_method, check_tol, direction_out);

    if (*bench) {
      cc::harness::BenchConfig cfg;
      cfg.n_list = n_list;
      cfg.trials_per_n = trials_per_n;
      cfg.conditioning = *cc::problems::conditioning_from_string(conditioning);
      cfg.methods = parse_methods(bench_methods);
      cfg.seed = bench_seed;
      cfg.options = to_options(bench_tol);
      cfg.threads = threads;

      std::ofstream file;
      std::ostream* out = open_output(bench_out, file);
      *out << cc::harness::kTrialCsvHeader << "\r\n";
      cc::harness::BenchSummary summary;
      std::vector<cc::harness::TrialRecord> current;
      cc::harness::run_bench(cfg, [&](const cc::harness::TrialRecord& r) {
        cc::harness::write_csv_row(*out, r);
        if (!current.empty() && current.front().seed != r.seed) {
          summary.add(current);
          current.clear();
        }
        current.push_back(r);
      });
      if (!current.empty()) summary.add(current);
      out->flush();
      std::ostream& report = out == &std::cout ? std::cerr : std::cout;
      summary.print(report);
      return 0;
    }

    if (*thomson) {
      cc::harness::ThomsonConfig cfg;
      cfg.k_list = k_list;
      cfg.methods = parse_methods(thomson_methods);
      cfg.fd_sigma = fd_sigma;
      cfg.seed = thomson_seed;
      std::ofstream file;
      std::ostream* out = open_output(thomson_out, file);
      *out << cc::harness::kThomsonCsvHeader << "\r\n";
      std::vector<cc::harness::ThomsonRecord> rows;
      cc::harness::run_thomson(cfg, [&](const cc::harness::ThomsonRecord& r) {
        cc::harness::write_csv_row(*out, r);
        rows.push_back(r);
      });
      out->flush();
      std::ostream& report = out == &std::cout ? std::cerr : std::cout;
      for (const auto& r : rows) {
        if (r.method != cc::sosc::Method::Inertia) continue;
        for (const auto& s : rows) {
          if (s.K != r.K || s.method == r.method || r.wall_time_s <= 0) continue;
          report << "K=" << s.K << ' ' << cc::sosc::to_string(s.method) << " time / inertia = "
                 << cc::harness::format_double(s.wall_time_s / r.wall_time_s) << '\n';
        }
      }
      return 0;
    }

    if (*compare) {
      std::optional<cc::sosc::Problem> problem;
      try {
        problem.emplace(cc::problems::load_problem(compare_file));
      } catch (const cc::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
      }
      const auto report = cc::harness::compare_methods(*problem, to_options(compare_tol));
      cc::harness::print_report(std::cout, *problem, report);
      return 0;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const cc::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return 0;
}
