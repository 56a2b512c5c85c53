#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace zjack {

// Dense row-major matrix of doubles. Small surface on purpose: the library
// only needs accumulation, matrix-vector products, and LU solves.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), d_(rows * cols, 0.0) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& operator()(std::size_t i, std::size_t j) { return d_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return d_[i * cols_ + j]; }

  double* row(std::size_t i) { return d_.data() + i * cols_; }
  const double* row(std::size_t i) const { return d_.data() + i * cols_; }

  std::span<double> data() { return d_; }
  std::span<const double> data() const { return d_; }

  void set_zero();
  void add_diagonal(double v);
  Matrix transposed() const;
  double max_abs() const;
  bool all_finite() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<double> d_;
};

// y = A x
void matvec(const Matrix& a, std::span<const double> x, std::span<double> y);
// y = A^T x
void matvec_transposed(const Matrix& a, std::span<const double> x, std::span<double> y);
// x^T A y
double quad_form(const Matrix& a, std::span<const double> x, std::span<const double> y);

// Partially pivoted LU factorization of a square matrix.
class LuSolver {
 public:
  explicit LuSolver(Matrix a);

  bool singular() const { return singular_; }
  // max |u_ii| / min |u_ii|; a cheap proxy reported with failures.
  double condition_estimate() const;

  // Solve A x = b. Throws solver_error when the factorization is singular.
  void solve(std::span<const double> b, std::span<double> x) const;
  std::vector<double> solve(std::span<const double> b) const;

  // Solve A^T x = b from the same factorization.
  void solve_transposed(std::span<const double> b, std::span<double> x) const;

 private:
  Matrix lu_;
  std::vector<std::size_t> piv_;
  bool singular_ = false;
};

double norm2(std::span<const double> v);
double dot(std::span<const double> a, std::span<const double> b);

}  // namespace zjack
