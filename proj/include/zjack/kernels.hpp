#pragma once

#include <cstddef>

namespace zjack::kernels {

// Function table for the dense inner loops. Every entry has a scalar
// reference implementation and (on x86-64) an AVX2/FMA variant; the two are
// equivalence-tested against each other and selected once at runtime.
struct Table {
  const char* name;
  // sum_i a[i] * b[i]
  double (*dot)(const double* a, const double* b, std::size_t n);
  // sum_i a[i]^2
  double (*sum_sq)(const double* a, std::size_t n);
  // y += alpha * x
  void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
  // A += alpha * x x^T for a row-major dim x dim matrix (full, not triangular)
  void (*rank1)(double* a, std::size_t dim, double alpha, const double* x);
};

const Table& scalar_table();

bool avx2_supported();
// Valid only when avx2_supported(); falls back to the scalar table otherwise.
const Table& avx2_table();

// Table used by the library: AVX2 when the CPU supports it, scalar otherwise.
// Override with ZJACK_KERNELS=scalar|avx2 (read once, at first use).
const Table& active();

}  // namespace zjack::kernels
