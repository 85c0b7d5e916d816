#pragma once

#include <array>
#include <cstdint>

namespace stardis {

// SplitMix64 finalizer (Steele, Lea, Flood). Bijective on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// xoshiro256++ (Blackman and Vigna), state expanded from the seed with
// SplitMix64 as the authors recommend. Instances are cheap to copy and
// must not be shared across threads without external synchronization.
class RandomStream {
 public:
  explicit constexpr RandomStream(std::uint64_t seed) noexcept : seed_(seed) {
    std::uint64_t s = seed;
    for (auto& word : state_) {
      s += 0x9E3779B97F4A7C15ull;
      word = mix64(s);
    }
  }

  constexpr std::uint64_t next_u64() noexcept {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Uniform deviate in [0, 1) with 53 random bits.
  constexpr double next_double() noexcept {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  constexpr std::uint64_t seed() const noexcept { return seed_; }

 private:
  static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
    return (x << k) | (x >> (64 - k));
  }

  std::uint64_t seed_;
  std::array<std::uint64_t, 4> state_{};
};

// Independent stream for one replication of an experiment. The stream seed
// is the SplitMix64 finalizer applied to master_seed advanced by
// (replication + 1) golden-ratio increments; distinct replications map to
// distinct seeds because the finalizer is bijective.
constexpr RandomStream derive_stream(std::uint64_t master_seed, std::uint64_t replication) noexcept {
  return RandomStream(mix64(master_seed + (replication + 1) * 0x9E3779B97F4A7C15ull));
}

}  // namespace stardis
