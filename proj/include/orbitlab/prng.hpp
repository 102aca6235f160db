#pragma once

#include <cstdint>

namespace orbitlab {

/// splitmix64 stream; bit-identical on every platform, unlike the standard
/// distributions, so seeded censuses reproduce byte-for-byte.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound) via rejection; exact, no modulo bias.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX / bound * bound;
    for (;;) {
      std::uint64_t x = next();
      if (x < limit) return x % bound;
    }
  }

private:
  std::uint64_t state_;
};

/// Default seed for reproducible random Gram matrices.
inline constexpr std::uint64_t kDefaultSeed = 0xC0AD;

}  // namespace orbitlab
