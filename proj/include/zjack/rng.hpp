#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace zjack {

// Philox4x32-10 counter-based generator. A stream is fully determined by
// (key, stream), so per-trial and per-replicate streams can be handed to
// concurrent workers without any shared state, and results cannot depend on
// scheduling.
class Philox {
 public:
  explicit Philox(std::uint64_t key, std::uint64_t stream = 0)
      : key_lo_(static_cast<std::uint32_t>(key)),
        key_hi_(static_cast<std::uint32_t>(key >> 32)),
        stream_lo_(static_cast<std::uint32_t>(stream)),
        stream_hi_(static_cast<std::uint32_t>(stream >> 32)) {}

  std::uint64_t next_u64() {
    if (have_ == 0) refill();
    --have_;
    const std::uint64_t v = buf_[1 - have_];
    return v;
  }

  // Uniform on [0, 1) with 53 random bits.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Standard normal via Box-Muller; the second value of each pair is cached.
  double next_gaussian() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    // u1 in (0, 1] so the log is finite.
    const double u1 = 1.0 - next_double();
    const double u2 = next_double();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
  }

  // Uniform over {0, ..., k-1}, rejection-sampled so every k is exact.
  std::uint64_t next_below(std::uint64_t k) {
    const std::uint64_t limit = k * ((~std::uint64_t{0}) / k);
    std::uint64_t v;
    do {
      v = next_u64();
    } while (v >= limit);
    return v % k;
  }

 private:
  void refill() {
    std::uint32_t c0 = static_cast<std::uint32_t>(counter_);
    std::uint32_t c1 = static_cast<std::uint32_t>(counter_ >> 32);
    std::uint32_t c2 = stream_lo_;
    std::uint32_t c3 = stream_hi_;
    std::uint32_t k0 = key_lo_;
    std::uint32_t k1 = key_hi_;
    for (int round = 0; round < 10; ++round) {
      const std::uint64_t p0 = 0xD2511F53ULL * c0;
      const std::uint64_t p1 = 0xCD9E8D57ULL * c2;
      const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
      const std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
      const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
      const std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
      const std::uint32_t n0 = hi1 ^ c1 ^ k0;
      const std::uint32_t n1 = lo1;
      const std::uint32_t n2 = hi0 ^ c3 ^ k1;
      const std::uint32_t n3 = lo0;
      c0 = n0; c1 = n1; c2 = n2; c3 = n3;
      k0 += 0x9E3779B9u;
      k1 += 0xBB67AE85u;
    }
    buf_[0] = (static_cast<std::uint64_t>(c1) << 32) | c0;
    buf_[1] = (static_cast<std::uint64_t>(c3) << 32) | c2;
    ++counter_;
    have_ = 2;
  }

  std::uint32_t key_lo_, key_hi_, stream_lo_, stream_hi_;
  std::uint64_t counter_ = 0;
  std::uint64_t buf_[2] = {0, 0};
  int have_ = 0;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

// splitmix64 step; used to derive sub-stream keys from (seed, tags...).
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
  return mix64(mix64(seed ^ mix64(a)) ^ mix64(b ^ 0x5851F42D4C957F2DULL));
}

}  // namespace zjack
