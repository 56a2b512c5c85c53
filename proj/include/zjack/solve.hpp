#pragma once

#include <cmath>
#include <limits>
#include <span>
#include <vector>

#include "zjack/model.hpp"

namespace zjack {

struct SolverConfig {
  // Euclidean norm of the empirical moment at which a root is accepted.
  double residual_tolerance = 1e-10;
  int max_iterations = 100;
  // Backtracking halves the Newton step down to this floor.
  double min_step = 0x1.0p-30;
  // Ridge added to the Newton system; escalated to 1e-10 when the plain
  // system is numerically singular, after which failure is hard.
  double jacobian_regularization = 0.0;
  // Iterates are projected onto the ball ||theta||_2 <= radius.
  double parameter_box_radius = std::numeric_limits<double>::infinity();
};

enum class SolveStatus { converged, max_iterations, stalled };

struct SolveResult {
  std::vector<double> theta;
  double residual_norm = std::numeric_limits<double>::infinity();
  int iterations = 0;
  bool converged = false;
  SolveStatus status = SolveStatus::max_iterations;
};

// (1/n) sum_i h(Z_i, theta). Throws numeric_error naming the first record
// whose moment is non-finite.
std::vector<double> empirical_moment(const ZModel& model, const Dataset& data,
                                     std::span<const double> theta);

// (1/n) sum_i dh/dtheta(Z_i, theta).
Matrix empirical_jacobian(const ZModel& model, const Dataset& data,
                          std::span<const double> theta);

// Deleted-sample variants: averages over the n-1 records with j != leave_out.
std::vector<double> empirical_moment_loo(const ZModel& model, const Dataset& data,
                                         std::size_t leave_out,
                                         std::span<const double> theta);
Matrix empirical_jacobian_loo(const ZModel& model, const Dataset& data,
                              std::size_t leave_out, std::span<const double> theta);

// Damped Newton iteration on the empirical moment equations.
SolveResult solve_z(const ZModel& model, const Dataset& data,
                    std::span<const double> init, const SolverConfig& config);

// Same iteration on the deleted-sample equations, typically warm-started at
// the full-sample estimate.
SolveResult loo_solve(const ZModel& model, const Dataset& data, std::size_t leave_out,
                      std::span<const double> warm_start, const SolverConfig& config);

// Central-difference check of moment_jacobian; test-only oracle.
Matrix finite_difference_jacobian(const ZModel& model, std::span<const double> record,
                                  std::span<const double> theta, double step = 1e-6);

}  // namespace zjack
