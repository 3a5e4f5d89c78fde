#pragma once

#include <cstdint>

namespace motifkit {

/// SplitMix64 (Steele, Lea, Flood). One multiply-xorshift pipeline drives both
/// the per-stream generator and stream-seed derivation, so every replication
/// gets an independent, order-free stream: results do not depend on which
/// thread ran which replication.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0,1) with 53 random bits.
  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Unbiased uniform integer in [0, n); n must be positive.
  std::uint64_t next_below(std::uint64_t n) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % n;
  }

  bool next_bernoulli(double p) { return next_double() < p; }

  static std::uint64_t mix(std::uint64_t x) {
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
  }

 private:
  std::uint64_t state_;
};

/// Stream seed for replication `index` under `master_seed`.
inline std::uint64_t stream_seed(std::uint64_t master_seed, std::uint64_t index) {
  return SplitMix64::mix(master_seed ^ SplitMix64::mix(index + 0x9E3779B97F4A7C15ULL));
}

inline SplitMix64 stream_for(std::uint64_t master_seed, std::uint64_t index) {
  return SplitMix64(stream_seed(master_seed, index));
}

}  // namespace motifkit
