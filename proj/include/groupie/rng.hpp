#pragma once
#include <cstdint>

// Counter-based randomness: every random decision is a pure function of
// (seed, counter), so generation order, chunking and thread count never
// change what gets sampled.

namespace groupie::rng {

inline constexpr std::uint64_t kGoldenGamma = 0x9e3779b97f4a7c15ULL;

// SplitMix64 finalizer (Stafford mix13), full 64-bit avalanche.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// k-th output of the SplitMix64 stream seeded with `seed`.
constexpr std::uint64_t stream(std::uint64_t seed, std::uint64_t k) noexcept {
    return mix64(seed + (k + 1) * kGoldenGamma);
}

// Uniform double in [0,1) from the top 53 bits.
constexpr double unit(std::uint64_t h) noexcept {
    return static_cast<double>(h >> 11) * 0x1.0p-53;
}

// Uniform double in (0,1]; safe to pass through log().
constexpr double unit_pos(std::uint64_t h) noexcept {
    return (static_cast<double>(h >> 11) + 1.0) * 0x1.0p-53;
}

}  // namespace groupie::rng
