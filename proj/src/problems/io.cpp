#include "curvcheck/problems/io.hpp"

#include <fstream>
#include <string>

#include "curvcheck/error.hpp"
#include "curvcheck/problems/thomson.hpp"

namespace curvcheck::problems {

using nlohmann::json;

namespace {

[[noreturn]] void schema_error(const std::string& what) { throw Error(ErrorCode::Schema, what); }

json flat(const Eigen::MatrixXd& X) {
  json out = json::array();
  for (Eigen::Index i = 0; i < X.rows(); ++i)
    for (Eigen::Index j = 0; j < X.cols(); ++j) out.push_back(X(i, j));
  return out;
}

json flat(const Eigen::VectorXd& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

double number(const json& v, const std::string& where) {
  if (!v.is_number()) schema_error(where + ": expected a number");
  return v.get<double>();
}

Eigen::MatrixXd read_matrix(const json& doc, const char* key, Eigen::Index rows, Eigen::Index cols) {
  const json& v = doc.at(key);
  if (!v.is_array()) schema_error(std::string(key) + " must be an array");
  Eigen::MatrixXd X(rows, cols);
  if (!v.empty() && v.front().is_array()) {
    if (static_cast<Eigen::Index>(v.size()) != rows) schema_error(std::string(key) + " has the wrong number of rows");
    for (Eigen::Index i = 0; i < rows; ++i) {
      const json& row = v[static_cast<std::size_t>(i)];
      if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
        schema_error(std::string(key) + " row " + std::to_string(i) + " has the wrong length");
      }
      for (Eigen::Index j = 0; j < cols; ++j) X(i, j) = number(row[static_cast<std::size_t>(j)], key);
    }
  } else {
    if (static_cast<Eigen::Index>(v.size()) != rows * cols) {
      schema_error(std::string(key) + " needs " + std::to_string(rows * cols) + " entries");
    }
    for (Eigen::Index i = 0; i < rows; ++i)
      for (Eigen::Index j = 0; j < cols; ++j) X(i, j) = number(v[static_cast<std::size_t>(i * cols + j)], key);
  }
  if (!X.allFinite()) schema_error(std::string(key) + " has non-finite entries");
  return X;
}

std::optional<Eigen::VectorXd> read_vector(const json& doc, const char* key, Eigen::Index n) {
  if (!doc.contains(key) || doc.at(key).is_null()) return std::nullopt;
  const json& v = doc.at(key);
  if (!v.is_array() || static_cast<Eigen::Index>(v.size()) != n) {
    schema_error(std::string(key) + " must be an array of " + std::to_string(n) + " numbers");
  }
  Eigen::VectorXd out(n);
  for (Eigen::Index i = 0; i < n; ++i) out(i) = number(v[static_cast<std::size_t>(i)], key);
  return out;
}

Eigen::Index read_dim(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc.at(key).is_number_integer()) schema_error(std::string(key) + " must be an integer");
  return doc.at(key).get<Eigen::Index>();
}

}  // namespace

json to_json(const sosc::Problem& problem) {
  json doc;
  doc["schema"] = kProblemSchema;
  doc["N"] = problem.variables();
  doc["M"] = problem.constraints();
  const bool rebuildable = problem.H.is_finite_difference() && problem.x && problem.lambda &&
                           problem.provenance.value("kind", "") == "thomson";
  if (!rebuildable) doc["H"] = flat(problem.H.materialize());
  doc["A"] = flat(problem.A.matrix());
  if (problem.x) doc["x"] = flat(*problem.x);
  if (problem.lambda) doc["lambda"] = flat(*problem.lambda);
  if (problem.truth) doc["truth"] = *problem.truth;
  doc["provenance"] = problem.provenance;
  return doc;
}

sosc::Problem problem_from_json(const json& doc) {
  try {
    if (!doc.is_object()) schema_error("problem document must be a JSON object");
    if (doc.value("schema", "") != kProblemSchema) schema_error(std::string("schema must be \"") + kProblemSchema + "\"");
    const Eigen::Index N = read_dim(doc, "N");
    const Eigen::Index M = read_dim(doc, "M");
    if (N < 2 || M < 1 || M >= N) schema_error("need N >= 2 and 1 <= M < N");
    if (!doc.contains("A")) schema_error("A is required");

    Eigen::MatrixXd A = read_matrix(doc, "A", M, N);
    auto x = read_vector(doc, "x", N);
    auto lambda = read_vector(doc, "lambda", M);
    json provenance = doc.value("provenance", json::object());
    if (!provenance.is_object()) schema_error("provenance must be an object");

    std::optional<sosc::Problem> problem;
    if (doc.contains("H") && !doc.at("H").is_null()) {
      Eigen::MatrixXd H = read_matrix(doc, "H", N, N);
      if ((H - H.transpose()).lpNorm<Eigen::Infinity>() > 1e-12 * H.lpNorm<Eigen::Infinity>()) {
        schema_error("H is not symmetric");
      }
      problem.emplace(linalg::ConstraintJacobian(std::move(A)), linalg::HessianOperator::dense(H));
    } else if (provenance.value("kind", "") == "thomson") {
      if (!x || !lambda) schema_error("a Thomson problem without H needs x and lambda");
      const int K = provenance.value("K", static_cast<int>(N / 3));
      const auto variant = provenance.value("variant", "orthogonally-invariant") == "plain"
                               ? ThomsonVariant::Plain
                               : ThomsonVariant::OrthogonallyInvariant;
      const Thomson t(K, variant);
      if (t.variables() != N || t.constraints() != M) schema_error("N and M do not match the Thomson provenance");
      problem.emplace(t.sosc_problem(*x, *lambda, false, provenance.value("fd_sigma", 0.0)));
      problem->A = linalg::ConstraintJacobian(std::move(A));
    } else {
      schema_error("H is required unless the problem is a Thomson instance");
    }
    problem->x = std::move(x);
    problem->lambda = std::move(lambda);
    if (doc.contains("truth") && !doc.at("truth").is_null()) {
      if (!doc.at("truth").is_boolean()) schema_error("truth must be a boolean");
      problem->truth = doc.at("truth").get<bool>();
    }
    problem->provenance = std::move(provenance);
    return std::move(*problem);
  } catch (const json::exception& e) {
    schema_error(e.what());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Schema) throw;
    schema_error(e.what());
  }
}

sosc::Problem load_problem(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Schema, "cannot open " + path.string());
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::Schema, path.string() + ": " + e.what());
  }
  return problem_from_json(doc);
}

void save_problem(const sosc::Problem& problem, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::Schema, "cannot write " + path.string());
  out << to_json(problem).dump(2) << '\n';
}

}  // namespace curvcheck::problems
