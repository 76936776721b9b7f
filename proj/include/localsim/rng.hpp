#pragma once

#include <cstdint>

#include "localsim/error.hpp"

namespace localsim {

// Finalizer from splitmix64 (Steele, Lea, Flood). Bijective, strong avalanche.
inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// A self-contained deterministic random stream (splitmix64 sequence).
// Streams built from distinct keys are uncorrelated for desk-scale draw
// counts, and the same key always reproduces the same sequence, bit for bit.
class RandomStream {
public:
  explicit RandomStream(std::uint64_t key) : state_(mix64(key ^ 0x6A09E667F3BCC908ULL)) {}

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix64(state_);
  }

  // Uniform on [0, bound), rejection-sampled so it is exactly unbiased.
  std::uint64_t uniform(std::uint64_t bound) {
    if (bound == 0) throw SimError(ErrorKind::InvalidArgument, "uniform: bound must be positive");
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do {
      x = next_u64();
    } while (x >= limit);
    return x % bound;
  }

  // Uniform label from {1, ..., m}.
  std::uint64_t uniform_label(std::uint64_t m) { return 1 + uniform(m); }

  // Uniform on [0, 1) with 53 bits of precision.
  double uniform_double() { return static_cast<double>(next_u64() >> 11) * 0x1p-53; }

  bool bernoulli(double p) { return uniform_double() < p; }

private:
  std::uint64_t state_;
};

// Key derivation for per-vertex random streams: statistically independent
// streams per (global seed, vertex id), reproducible across reruns, and never
// correlated between distinct vertices by construction.
inline std::uint64_t vertex_stream_key(std::uint64_t global_seed, std::uint64_t vertex_id) {
  return mix64(mix64(global_seed + 0x9E3779B97F4A7C15ULL) ^
               (0xC2B2AE3D27D4EB4FULL * (vertex_id + 1)));
}

inline RandomStream derive_vertex_rng(std::uint64_t global_seed, std::uint64_t vertex_id) {
  return RandomStream(vertex_stream_key(global_seed, vertex_id));
}

} // namespace localsim
