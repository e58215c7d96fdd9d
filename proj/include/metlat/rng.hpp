#pragma once

#include <cstdint>

namespace metlat {

/// Small deterministic generator (splitmix64). Used instead of the
/// standard distributions so that seeded runs reproduce bit-for-bit on
/// every platform and standard library.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform draw in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

private:
  std::uint64_t state_;
};

/// Per-trial seed stream: independent of execution order, so trials can be
/// evaluated in any order (or in parallel) without changing results.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 mix(seed ^ (0xa0761d6478bd642fULL + index * 0xe7037ed1a0b428dbULL));
  return mix.next();
}

}  // namespace metlat
