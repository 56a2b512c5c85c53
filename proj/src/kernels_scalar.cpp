#include "zjack/kernels.hpp"

// Reference kernels. Deliberately plain loops: these define the semantics
// the vector variants are tested against.

namespace zjack::kernels {
namespace {

double dot_scalar(const double* a, const double* b, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
  return s;
}

double sum_sq_scalar(const double* a, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += a[i] * a[i];
  return s;
}

void axpy_scalar(double alpha, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void rank1_scalar(double* a, std::size_t dim, double alpha, const double* x) {
  for (std::size_t i = 0; i < dim; ++i) {
    const double c = alpha * x[i];
    double* row = a + i * dim;
    for (std::size_t j = 0; j < dim; ++j) row[j] += c * x[j];
  }
}

}  // namespace

const Table& scalar_table() {
  static const Table t{"scalar", dot_scalar, sum_sq_scalar, axpy_scalar,
                       rank1_scalar};
  return t;
}

}  // namespace zjack::kernels
