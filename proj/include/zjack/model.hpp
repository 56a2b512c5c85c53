#pragma once

#include <cstdint>
#include <cstddef>
#include <span>
#include <vector>

#include "zjack/linalg.hpp"

namespace zjack {

// Observations in a fixed-width row-major layout; each model documents how it
// reads a row. Contiguous storage keeps the per-record loops kernel-friendly.
class Dataset {
 public:
  explicit Dataset(std::size_t record_width) : width_(record_width) {}
  Dataset(std::size_t record_width, std::vector<double> rows)
      : width_(record_width), d_(std::move(rows)) {}

  std::size_t size() const { return width_ == 0 ? 0 : d_.size() / width_; }
  std::size_t width() const { return width_; }

  std::span<const double> record(std::size_t i) const {
    return {d_.data() + i * width_, width_};
  }
  std::span<double> record_mut(std::size_t i) {
    return {d_.data() + i * width_, width_};
  }

  void append(std::span<const double> row) {
    d_.insert(d_.end(), row.begin(), row.end());
  }
  void reserve(std::size_t n) { d_.reserve(n * width_); }

  Dataset resampled(std::span<const std::size_t> indices) const;
  Dataset without(std::size_t drop) const;
  Dataset permuted(std::span<const std::size_t> order) const;

  // FNV-1a over the raw bytes; used to assert paired designs and determinism.
  std::uint64_t fingerprint() const;

 private:
  std::size_t width_;
  std::vector<double> d_;
};

// A Z-estimation problem: moment function h(z, theta) with E[h(Z, theta*)] = 0,
// its theta-Jacobian, and a scalar target functional of the parameter.
class ZModel {
 public:
  virtual ~ZModel() = default;

  std::size_t dim() const { return dim_; }
  std::size_t record_width() const { return width_; }

  // h(z, theta); out has length dim().
  virtual void moment(std::span<const double> record, std::span<const double> theta,
                      std::span<double> out) const = 0;

  // d h / d theta at (z, theta); out is dim() x dim().
  virtual void moment_jacobian(std::span<const double> record,
                               std::span<const double> theta, Matrix& out) const = 0;

  // acc += d h / d theta. Overridden by models whose Jacobian is a cheap
  // rank-one update; the default routes through moment_jacobian.
  virtual void add_moment_jacobian(std::span<const double> record,
                                   std::span<const double> theta, Matrix& acc) const;

  virtual double functional(std::span<const double> theta) const = 0;
  virtual void functional_gradient(std::span<const double> theta,
                                   std::span<double> out) const = 0;

  virtual bool has_functional_hessian() const { return false; }
  virtual void functional_hessian(std::span<const double> theta, Matrix& out) const;

  // out(j,k) = sum_m v[m] * d^2 h_m / (d theta_j d theta_k); needed only by the
  // theory module. Models without third-order structure may leave the default.
  virtual bool has_moment_hessian() const { return false; }
  virtual void moment_hessian_contract(std::span<const double> record,
                                       std::span<const double> theta,
                                       std::span<const double> v, Matrix& out) const;

  // Throws contract_violation on a structurally invalid record.
  virtual void validate_record(std::span<const double> record, std::size_t index) const;

 protected:
  ZModel(std::size_t dim, std::size_t record_width) : dim_(dim), width_(record_width) {}

 private:
  std::size_t dim_;
  std::size_t width_;
};

void validate_dataset(const ZModel& model, const Dataset& data);

}  // namespace zjack
