#pragma once

#include <memory>
#include <vector>

#include "zjack/model.hpp"
#include "zjack/solve.hpp"

namespace zjack {

// Record layouts (row-major, fixed width):
//   linear / logistic:  [x_0 .. x_{d-1}, y]            width d + 1
//   ipw:                [x_0 .. x_{d-2}, a, y]         width d + 1, a in {0,1}
//   iv (tsls):          [w_0 .. w_{k-1}, x, y]         width k + 2
// Logistic models built with an intercept expect x_0 == 1 on every record.

// Score applied to the linear-model residual y - <x, theta>.
struct ResidualScore {
  enum class Kind { identity, pseudo_huber };
  Kind kind = Kind::identity;
  double delta = 1.0;  // pseudo-Huber scale; f(t) = t / sqrt(1 + t^2/delta^2)

  static ResidualScore identity() { return {Kind::identity, 1.0}; }
  static ResidualScore pseudo_huber(double delta);

  double f(double t) const;
  double df(double t) const;
  double d2f(double t) const;
};

// Scalar target of the estimation problem.
struct Functional {
  enum class Kind { quadratic, linear };
  Kind kind = Kind::quadratic;
  Matrix q;               // quadratic: tau(theta) = theta^T Q theta
  std::vector<double> c;  // linear:    tau(theta) = <c, theta>

  static Functional quadratic(Matrix q);
  static Functional linear(std::vector<double> c);
};

// h(z, theta) = x f(y - <x, theta>); OLS when f is the identity.
std::unique_ptr<ZModel> make_linear_model(std::size_t dim, ResidualScore score,
                                          Functional functional);

// Sample-mean model h(z, theta) = z - theta in one dimension; the smallest
// linear model, used throughout the tests.
std::unique_ptr<ZModel> make_mean_model(Functional functional);

// h(z, theta) = x { y - logistic(<theta, x>) }; tau = first coordinate.
std::unique_ptr<ZModel> make_logistic_model(std::size_t dim, bool with_intercept);

// Stacked propensity + weighting equations; theta = (beta, tau_ate) with the
// average treatment effect in the last coordinate, which is also the target.
std::unique_ptr<ZModel> make_ipw_model(std::size_t dim);

// Two-stage least squares with k >= 2 instruments; theta = (alpha, beta, pi)
// of dimension k + 2, target tau = beta.
std::unique_ptr<ZModel> make_tsls_model(std::size_t instruments);

// Exact IPW solver: logistic fit for the propensity block, then the averaged
// weighting summand. Must reach the same root as the generic Newton path.
SolveResult ipw_two_stage_solve(const ZModel& ipw_model, const Dataset& data,
                                const SolverConfig& config);

// Exact TSLS solver: first-stage linear solve for pi, then (alpha, beta).
SolveResult tsls_closed_form_solve(const ZModel& tsls_model, const Dataset& data);

// Numerically stable logistic function and derivatives.
double logistic(double t);
inline double logistic_d1(double t) {
  const double p = logistic(t);
  return p * (1.0 - p);
}
inline double logistic_d2(double t) {
  const double p = logistic(t);
  return p * (1.0 - p) * (1.0 - 2.0 * p);
}

}  // namespace zjack
