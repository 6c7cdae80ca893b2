#pragma once

#include <cstdint>

#include "horogame/rational.hpp"

namespace horogame {

// splitmix64: tiny, fully specified, bit-reproducible across platforms.
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, n) by rejection; n > 0
    std::uint64_t below(std::uint64_t n) {
        std::uint64_t lim = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v;
        do {
            v = next();
        } while (v >= lim);
        return v % n;
    }

    // dyadic rational in [0, 1) with `bits` bits
    Rat unit_rat(int bits = 16) {
        std::uint64_t v = next() >> (64 - bits);
        return Rat(BigInt(v), BigInt(1) << bits);
    }
};

// Per-round stream derivation so that replays with more rounds share the
// prefix draw-for-draw: randomness depends only on (seed, round, salt).
inline SplitMix64 round_rng(std::uint64_t seed, int round, std::uint64_t salt = 0) {
    SplitMix64 mixer(seed ^ (0x5851f42d4c957f2dULL * static_cast<std::uint64_t>(round + 1)) ^ salt);
    mixer.next();
    return mixer;
}

}  // namespace horogame
