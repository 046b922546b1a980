#pragma once

#include <functional>
#include <span>
#include <vector>

namespace ebnoise {

struct SimplexOptions {
  double initial_step = 0.2;
  /// Stop when the simplex characteristic size drops below this.
  double size_tol = 1e-4;
  int max_iterations = 2000;
};

struct SimplexResult {
  std::vector<double> x;
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
};

using Objective = std::function<double(std::span<const double>)>;

/// Derivative-free Nelder-Mead minimisation (GSL nmsimplex2).
SimplexResult minimize_simplex(const Objective& f, std::vector<double> x0,
                               const SimplexOptions& options = {});

}  // namespace ebnoise
