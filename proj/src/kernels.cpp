#include "zjack/kernels.hpp"

#include <cstdlib>
#include <cstring>
#include <stdexcept>

namespace zjack::kernels {

bool avx2_supported() {
#if defined(ZJACK_HAVE_AVX2)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

namespace {

const Table& select() {
  if (const char* env = std::getenv("ZJACK_KERNELS")) {
    if (std::strcmp(env, "scalar") == 0) return scalar_table();
    if (std::strcmp(env, "avx2") == 0) {
      if (!avx2_supported())
        throw std::runtime_error("ZJACK_KERNELS=avx2 but AVX2 is unavailable");
      return avx2_table();
    }
    throw std::runtime_error("unknown ZJACK_KERNELS value");
  }
  return avx2_supported() ? avx2_table() : scalar_table();
}

}  // namespace

const Table& active() {
  static const Table& t = select();
  return t;
}

}  // namespace zjack::kernels
