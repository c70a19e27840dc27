#ifndef NEMINEQ_RNG_HPP
#define NEMINEQ_RNG_HPP

#include <cstdint>

namespace nemineq {

/// Counter-based generator built on the SplitMix64 finalizer. Output i of
/// stream (seed, stream) is a pure function of (seed, stream, i), so
/// replicates own disjoint streams and results do not depend on scheduling.
class SplitRng {
public:
  SplitRng(std::uint64_t seed, std::uint64_t stream)
      : key_(mix(mix(seed + kGolden) ^ (stream + kStreamSalt))) {}

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t next_u64() { return mix(key_ + (++counter_) * kGolden); }

  /// Uniform double in [0, 1) with 53 random bits.
  double next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Rademacher sign, 64 per underlying draw.
  int next_sign() {
    if (bits_left_ == 0) {
      bit_buf_ = next_u64();
      bits_left_ = 64;
    }
    const int s = (bit_buf_ & 1u) ? 1 : -1;
    bit_buf_ >>= 1;
    --bits_left_;
    return s;
  }

private:
  static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
  static constexpr std::uint64_t kStreamSalt = 0xD1B54A32D192ED03ULL;

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  std::uint64_t bit_buf_ = 0;
  int bits_left_ = 0;
};

}  // namespace nemineq

#endif  // NEMINEQ_RNG_HPP
