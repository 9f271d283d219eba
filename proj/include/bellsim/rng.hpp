#pragma once

#include <cstdint>

namespace bellsim {

// 64-bit finalizer with full avalanche (the MurmurHash3 / SplitMix64 mixer).
inline std::uint64_t mix64(std::uint64_t x) {
    x ^= x >> 33;
    x *= 0xff51afd7ed558ccdULL;
    x ^= x >> 33;
    x *= 0xc4ceb9fe1a85ec53ULL;
    x ^= x >> 33;
    return x;
}

// Counter-based random stream: one word per (seed, trial, slot) cell,
// obtained by hashing the triple. No state and no call-order dependence,
// so trials can be generated on any worker in any order with identical
// results.
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t trial, std::uint32_t slot) {
        std::uint64_t h = mix64(seed + 0x9e3779b97f4a7c15ULL);
        h = mix64(h ^ (trial + 0xbf58476d1ce4e5b9ULL));
        word_ = mix64(h ^ (slot + 0x94d049bb133111ebULL));
    }

    std::uint64_t word() const { return word_; }

    // Uniform in [0, 1) with 53-bit resolution.
    double uniform() const {
        return static_cast<double>(word_ >> 11) * 0x1.0p-53;
    }

private:
    std::uint64_t word_;
};

// Fixed draw slots within one trial.
inline constexpr std::uint32_t kSlotObject = 0;
inline constexpr std::uint32_t kSlotCard = 1;

}  // namespace bellsim
