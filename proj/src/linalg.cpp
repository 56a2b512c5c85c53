#include "zjack/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "zjack/errors.hpp"
#include "zjack/kernels.hpp"

namespace zjack {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

void Matrix::set_zero() { std::fill(d_.begin(), d_.end(), 0.0); }

void Matrix::add_diagonal(double v) {
  for (std::size_t i = 0; i < rows_ && i < cols_; ++i) d_[i * cols_ + i] += v;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

double Matrix::max_abs() const {
  double m = 0.0;
  for (double v : d_) m = std::max(m, std::abs(v));
  return m;
}

bool Matrix::all_finite() const {
  for (double v : d_)
    if (!std::isfinite(v)) return false;
  return true;
}

void matvec(const Matrix& a, std::span<const double> x, std::span<double> y) {
  const auto& k = kernels::active();
  for (std::size_t i = 0; i < a.rows(); ++i) y[i] = k.dot(a.row(i), x.data(), a.cols());
}

void matvec_transposed(const Matrix& a, std::span<const double> x, std::span<double> y) {
  const auto& k = kernels::active();
  std::fill(y.begin(), y.end(), 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i) k.axpy(x[i], a.row(i), y.data(), a.cols());
}

double quad_form(const Matrix& a, std::span<const double> x, std::span<const double> y) {
  const auto& k = kernels::active();
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    s += x[i] * k.dot(a.row(i), y.data(), a.cols());
  return s;
}

LuSolver::LuSolver(Matrix a) : lu_(std::move(a)), piv_(lu_.rows()) {
  const std::size_t n = lu_.rows();
  if (lu_.cols() != n) throw contract_violation("LU requires a square matrix");
  const auto& k = kernels::active();
  const double tiny =
      std::numeric_limits<double>::epsilon() * static_cast<double>(n) * lu_.max_abs();

  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    double best = std::abs(lu_(c, c));
    for (std::size_t r = c + 1; r < n; ++r) {
      const double v = std::abs(lu_(r, c));
      if (v > best) { best = v; p = r; }
    }
    piv_[c] = p;
    if (p != c)
      for (std::size_t j = 0; j < n; ++j) std::swap(lu_(c, j), lu_(p, j));
    const double pivot = lu_(c, c);
    if (!(std::abs(pivot) > tiny) || !std::isfinite(pivot)) {
      singular_ = true;
      return;
    }
    for (std::size_t r = c + 1; r < n; ++r) {
      const double f = lu_(r, c) / pivot;
      lu_(r, c) = f;
      if (f != 0.0) k.axpy(-f, lu_.row(c) + c + 1, lu_.row(r) + c + 1, n - c - 1);
    }
  }
}

double LuSolver::condition_estimate() const {
  const std::size_t n = lu_.rows();
  double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double v = std::abs(lu_(i, i));
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  if (lo == 0.0) return std::numeric_limits<double>::infinity();
  return hi / lo;
}

void LuSolver::solve(std::span<const double> b, std::span<double> x) const {
  if (singular_) throw solver_error("singular system", condition_estimate());
  const std::size_t n = lu_.rows();
  const auto& k = kernels::active();
  std::copy(b.begin(), b.end(), x.begin());
  for (std::size_t i = 0; i < n; ++i) {
    if (piv_[i] != i) std::swap(x[i], x[piv_[i]]);
    x[i] -= k.dot(lu_.row(i), x.data(), i);
  }
  for (std::size_t i = n; i-- > 0;) {
    x[i] -= k.dot(lu_.row(i) + i + 1, x.data() + i + 1, n - i - 1);
    x[i] /= lu_(i, i);
  }
}

std::vector<double> LuSolver::solve(std::span<const double> b) const {
  std::vector<double> x(b.size());
  solve(b, x);
  return x;
}

void LuSolver::solve_transposed(std::span<const double> b, std::span<double> x) const {
  if (singular_) throw solver_error("singular system", condition_estimate());
  const std::size_t n = lu_.rows();
  // P A = L U  =>  A^T = U^T L^T P: forward with U^T, back with unit L^T,
  // then undo the row swaps in reverse order.
  std::copy(b.begin(), b.end(), x.begin());
  for (std::size_t i = 0; i < n; ++i) {
    double s = x[i];
    for (std::size_t r = 0; r < i; ++r) s -= lu_(r, i) * x[r];
    x[i] = s / lu_(i, i);
  }
  for (std::size_t i = n; i-- > 0;) {
    double s = x[i];
    for (std::size_t r = i + 1; r < n; ++r) s -= lu_(r, i) * x[r];
    x[i] = s;
  }
  for (std::size_t i = n; i-- > 0;)
    if (piv_[i] != i) std::swap(x[i], x[piv_[i]]);
}

double norm2(std::span<const double> v) {
  return std::sqrt(kernels::active().sum_sq(v.data(), v.size()));
}

double dot(std::span<const double> a, std::span<const double> b) {
  return kernels::active().dot(a.data(), b.data(), a.size());
}

}  // namespace zjack
