#pragma once

#include <vector>

#include "curvcheck/sosc/verify.hpp"

namespace curvcheck::problems {

/// Iterates x_n = x0 / 2^n, n = 0..count, of Newton's method on f(x) = x^3,
/// which converge to the stationary point 0 where f'' vanishes.
std::vector<double> cube_sqp_iterates(double x0, int count);

/// The limit point of those iterates as an SOSC problem: min x^3 + y^2/2
/// subject to y = 0, at the origin. The reduced Hessian is [0], so SOSC
/// cannot hold there.
sosc::Problem cube_limit_problem();

}  // namespace curvcheck::problems
