#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace zjack {

// Non-finite value produced while evaluating a model on a record.
class numeric_error : public std::runtime_error {
 public:
  numeric_error(const std::string& what, std::size_t record_index)
      : std::runtime_error(what + " (record " + std::to_string(record_index) + ")"),
        record_index_(record_index) {}
  std::size_t record_index() const { return record_index_; }

 private:
  std::size_t record_index_;
};

// Newton system remained singular after the ridge escalation, or a closed-form
// solve hit a rank-deficient Gram matrix.
class solver_error : public std::runtime_error {
 public:
  solver_error(const std::string& what, double condition_estimate)
      : std::runtime_error(what + " (condition estimate " +
                           std::to_string(condition_estimate) + ")"),
        condition_(condition_estimate) {}
  double condition_estimate() const { return condition_; }

 private:
  double condition_;
};

// Propensity score evaluated to exactly 0 (treated) or 1 (untreated).
class overlap_error : public numeric_error {
 public:
  using numeric_error::numeric_error;
};

// Jackknife requested on a leave-one-out set with failed solves.
class jackknife_undefined : public std::runtime_error {
 public:
  explicit jackknife_undefined(std::vector<std::size_t> failed)
      : std::runtime_error("jackknife undefined: " +
                           std::to_string(failed.size()) +
                           " leave-one-out solve(s) failed"),
        failed_(std::move(failed)) {}
  const std::vector<std::size_t>& failed_indices() const { return failed_; }

 private:
  std::vector<std::size_t> failed_;
};

// More than 10% of bootstrap replicates failed.
class unreliable_variance : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller violated a documented precondition (dimension mismatch, bad record,
// negative variance, ...).
class contract_violation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace zjack
