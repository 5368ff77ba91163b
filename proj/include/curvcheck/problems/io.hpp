#pragma once

#include <filesystem>

#include <nlohmann/json.hpp>

#include "curvcheck/sosc/verify.hpp"

namespace curvcheck::problems {

inline constexpr const char* kProblemSchema = "dense-v1";

/// {N, M, schema: "dense-v1", H, A, x, lambda, truth, provenance}. Matrices
/// are flat row-major arrays. H is omitted for finite-difference Thomson
/// problems, which are rebuilt from x, lambda and the provenance; any other
/// operator is written out materialized.
nlohmann::json to_json(const sosc::Problem& problem);

/// Inverse of to_json. Also accepts matrices as arrays of rows. Throws
/// Error(Schema) on anything malformed.
sosc::Problem problem_from_json(const nlohmann::json& doc);

sosc::Problem load_problem(const std::filesystem::path& path);
void save_problem(const sosc::Problem& problem, const std::filesystem::path& path);

}  // namespace curvcheck::problems
