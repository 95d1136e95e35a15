#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "billiards/polygon.hpp"
#include "billiards/sequence.hpp"

namespace billiards {

struct OptimizerConfig {
  double tol_f = 1e-12;   // objective spread at termination
  double tol_x = 1e-10;   // simplex diameter at termination
  int max_iter = 20000;
  int restarts = 8;       // seeded random starts beside the regular point
  std::uint64_t seed = 0;
  double fd_step = 1e-5;  // finite-difference step in gap coordinates
};

struct MinimizationResult {
  ModuliChart chart_min;
  double value = 0.0;
  double grad_norm = 0.0;      // finite-difference gradient at chart_min
  double hess_min_eig = 0.0;   // smallest Hessian eigenvalue at chart_min
  double distance_to_regular = 0.0;  // sup-norm in gap coordinates
  bool converged = false;      // tolerances met and grad_norm below 1e-6
  int iterations = 0;
  int evaluations = 0;
};

// Average length of the cyclic family of a over the polygon of the chart
// point. Degenerate chart points raise the usual construction errors.
double chart_objective(const ModuliChart& chart, const BilliardSequence& a);

// Central differences in the free gap coordinates. Steps that leave the
// admissible region (a gap weight dropping to zero or a failing objective)
// are halved up to ten times before giving up with NumericError.
std::vector<double> gradient_fd(int k, const BilliardSequence& a,
                                const ModuliChart& x, double fd_step = 1e-5);
std::vector<std::vector<double>> hessian_fd(int k, const BilliardSequence& a,
                                            const ModuliChart& x,
                                            double fd_step = 1e-5);

// Nelder-Mead over the k-3 log-gap variables, best of cfg.restarts seeded
// random starts plus the regular point. For k = 3 the chart is a single
// point and the result is immediate.
MinimizationResult minimize_average_length(int k, const BilliardSequence& a,
                                           const OptimizerConfig& cfg);

struct RegularMinimumReport {
  MinimizationResult minimization;
  double grad_norm_regular = 0.0;     // gradient norm at the regular point
  double hess_min_eig_regular = 0.0;  // Hessian floor at the regular point
  bool passes = false;
  std::string failing_check;  // empty when passes
};

// Certifies that the minimizer sits at the regular polygon: minimizer
// within 1e-4 of the regular point, gradient below 1e-6 there, Hessian
// positive definite there.
RegularMinimumReport verify_regular_minimum(int k, const BilliardSequence& a,
                                            const OptimizerConfig& cfg);

}  // namespace billiards
