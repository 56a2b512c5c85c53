#include "zjack/solve.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "zjack/errors.hpp"
#include "zjack/kernels.hpp"

namespace zjack {

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

void accumulate_moment(const ZModel& model, const Dataset& data, std::size_t skip,
                       std::span<const double> theta, std::span<double> out) {
  const std::size_t d = model.dim();
  std::fill(out.begin(), out.end(), 0.0);
  std::vector<double> h(d);
  const auto& k = kernels::active();
  for (std::size_t i = 0; i < data.size(); ++i) {
    if (i == skip) continue;
    model.moment(data.record(i), theta, h);
    for (double v : h)
      if (!std::isfinite(v)) throw numeric_error("non-finite moment value", i);
    k.axpy(1.0, h.data(), out.data(), d);
  }
  const double inv = 1.0 / static_cast<double>(data.size() - (skip == kNone ? 0 : 1));
  for (double& v : out) v *= inv;
}

Matrix accumulate_jacobian(const ZModel& model, const Dataset& data, std::size_t skip,
                           std::span<const double> theta) {
  const std::size_t d = model.dim();
  Matrix sum(d, d);
  for (std::size_t i = 0; i < data.size(); ++i) {
    if (i == skip) continue;
    model.add_moment_jacobian(data.record(i), theta, sum);
  }
  if (!sum.all_finite()) {
    // Rescan per record so the error names the offender.
    Matrix probe(d, d);
    for (std::size_t i = 0; i < data.size(); ++i) {
      if (i == skip) continue;
      probe.set_zero();
      model.moment_jacobian(data.record(i), theta, probe);
      if (!probe.all_finite()) throw numeric_error("non-finite moment Jacobian", i);
    }
    throw numeric_error("non-finite moment Jacobian", data.size());
  }
  const double inv = 1.0 / static_cast<double>(data.size() - (skip == kNone ? 0 : 1));
  for (double& v : sum.data()) v *= inv;
  return sum;
}

void project_to_box(std::span<double> theta, double radius) {
  if (!std::isfinite(radius)) return;
  const double norm = norm2(theta);
  if (norm > radius) {
    const double s = radius / norm;
    for (double& v : theta) v *= s;
  }
}

// Newton direction with one ridge escalation before hard failure.
std::vector<double> newton_step(Matrix jac, std::span<const double> m,
                                const SolverConfig& config, std::size_t leave_out) {
  const double ridges[2] = {config.jacobian_regularization,
                            std::max(config.jacobian_regularization, 1e-10)};
  double cond = 0.0;
  for (int attempt = 0; attempt < 2; ++attempt) {
    Matrix sys = jac;
    if (ridges[attempt] != 0.0) sys.add_diagonal(ridges[attempt]);
    LuSolver lu(std::move(sys));
    if (!lu.singular()) return lu.solve(m);
    cond = lu.condition_estimate();
    if (ridges[attempt] == ridges[1]) break;
  }
  std::string what = "Newton system singular after regularization";
  if (leave_out != kNone) what += " (leave-out " + std::to_string(leave_out) + ")";
  throw solver_error(what, cond);
}

SolveResult newton_solve(const ZModel& model, const Dataset& data, std::size_t leave_out,
                         std::span<const double> init, const SolverConfig& config) {
  if (init.size() != model.dim())
    throw contract_violation("initial point has wrong dimension");
  for (double v : init)
    if (!std::isfinite(v)) throw contract_violation("initial point is not finite");
  validate_dataset(model, data);
  if (config.residual_tolerance <= 0 || config.max_iterations < 1)
    throw contract_violation("invalid solver configuration");

  SolveResult res;
  res.theta.assign(init.begin(), init.end());
  project_to_box(res.theta, config.parameter_box_radius);

  std::vector<double> m(model.dim());
  accumulate_moment(model, data, leave_out, res.theta, m);
  res.residual_norm = norm2(m);

  std::vector<double> cand(model.dim());
  std::vector<double> mc(model.dim());
  for (int it = 0; it < config.max_iterations; ++it) {
    if (res.residual_norm <= config.residual_tolerance) break;
    Matrix jac = accumulate_jacobian(model, data, leave_out, res.theta);
    const std::vector<double> step = newton_step(std::move(jac), m, config, leave_out);

    double alpha = 1.0;
    double rc;
    while (true) {
      for (std::size_t j = 0; j < cand.size(); ++j)
        cand[j] = res.theta[j] - alpha * step[j];
      project_to_box(cand, config.parameter_box_radius);
      try {
        accumulate_moment(model, data, leave_out, cand, mc);
        rc = norm2(mc);
      } catch (const numeric_error&) {
        rc = std::numeric_limits<double>::infinity();
      }
      if (rc < res.residual_norm) break;
      if (alpha <= config.min_step) {
        res.status = SolveStatus::stalled;
        res.converged = false;
        return res;
      }
      alpha *= 0.5;
    }
    res.theta = cand;
    m = mc;
    res.residual_norm = rc;
    res.iterations = it + 1;
  }

  res.converged = res.residual_norm <= config.residual_tolerance;
  res.status = res.converged ? SolveStatus::converged : SolveStatus::max_iterations;
  return res;
}

}  // namespace

std::vector<double> empirical_moment(const ZModel& model, const Dataset& data,
                                     std::span<const double> theta) {
  if (theta.size() != model.dim()) throw contract_violation("theta has wrong dimension");
  std::vector<double> out(model.dim());
  accumulate_moment(model, data, kNone, theta, out);
  return out;
}

Matrix empirical_jacobian(const ZModel& model, const Dataset& data,
                          std::span<const double> theta) {
  if (theta.size() != model.dim()) throw contract_violation("theta has wrong dimension");
  return accumulate_jacobian(model, data, kNone, theta);
}

std::vector<double> empirical_moment_loo(const ZModel& model, const Dataset& data,
                                         std::size_t leave_out,
                                         std::span<const double> theta) {
  if (leave_out >= data.size()) throw contract_violation("leave-out index out of range");
  std::vector<double> out(model.dim());
  accumulate_moment(model, data, leave_out, theta, out);
  return out;
}

Matrix empirical_jacobian_loo(const ZModel& model, const Dataset& data,
                              std::size_t leave_out, std::span<const double> theta) {
  if (leave_out >= data.size()) throw contract_violation("leave-out index out of range");
  return accumulate_jacobian(model, data, leave_out, theta);
}

SolveResult solve_z(const ZModel& model, const Dataset& data,
                    std::span<const double> init, const SolverConfig& config) {
  return newton_solve(model, data, kNone, init, config);
}

SolveResult loo_solve(const ZModel& model, const Dataset& data, std::size_t leave_out,
                      std::span<const double> warm_start, const SolverConfig& config) {
  if (leave_out >= data.size()) throw contract_violation("leave-out index out of range");
  return newton_solve(model, data, leave_out, warm_start, config);
}

Matrix finite_difference_jacobian(const ZModel& model, std::span<const double> record,
                                  std::span<const double> theta, double step) {
  if (step <= 0) throw contract_violation("finite difference step must be positive");
  const std::size_t d = model.dim();
  Matrix out(d, d);
  std::vector<double> lo(theta.begin(), theta.end());
  std::vector<double> hi(theta.begin(), theta.end());
  std::vector<double> mlo(d), mhi(d);
  for (std::size_t j = 0; j < d; ++j) {
    const double h = step * std::max(1.0, std::abs(theta[j]));
    hi[j] = theta[j] + h;
    lo[j] = theta[j] - h;
    model.moment(record, hi, mhi);
    model.moment(record, lo, mlo);
    for (double v : mhi)
      if (!std::isfinite(v)) throw numeric_error("non-finite probe evaluation", j);
    for (double v : mlo)
      if (!std::isfinite(v)) throw numeric_error("non-finite probe evaluation", j);
    for (std::size_t i = 0; i < d; ++i) out(i, j) = (mhi[i] - mlo[i]) / (2.0 * h);
    hi[j] = theta[j];
    lo[j] = theta[j];
  }
  return out;
}

}  // namespace zjack
