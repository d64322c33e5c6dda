#pragma once

#include <cstdint>

namespace perclab {

inline constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ULL;

/// splitmix64 output finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Top 53 bits as a double in [0, 1).
constexpr double to_unit(std::uint64_t x) noexcept {
  return static_cast<double>(x >> 11) * 0x1.0p-53;
}

/// The k-th output (k = 0, 1, ...) of a splitmix64 stream seeded with
/// `state`, computed without stepping through the first k outputs.
constexpr std::uint64_t splitmix_at(std::uint64_t state, std::uint64_t k) noexcept {
  return mix64(state + kGoldenGamma * (k + 1));
}

/// Sequential splitmix64 generator. Bit-exact across platforms, so the same
/// seed reproduces the same graphs and percolation samples anywhere.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  constexpr std::uint64_t next() noexcept {
    state_ += kGoldenGamma;
    return mix64(state_);
  }
  constexpr std::uint64_t operator()() noexcept { return next(); }
  static constexpr std::uint64_t min() noexcept { return 0; }
  static constexpr std::uint64_t max() noexcept { return ~std::uint64_t{0}; }

  double uniform() noexcept { return to_unit(next()); }

  /// Unbiased integer in [0, bound) by rejection of the low residue band.
  std::uint64_t below(std::uint64_t bound) noexcept {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t x = next();
      if (x >= threshold) return x % bound;
    }
  }

 private:
  std::uint64_t state_;
};

/// Stream key for one Monte Carlo trial. Edge e of trial t draws
/// to_unit(splitmix_at(trial_key(seed, t), e)).
constexpr std::uint64_t trial_key(std::uint64_t seed, std::uint64_t trial) noexcept {
  return splitmix_at(seed, trial);
}

}  // namespace perclab
