#pragma once

#include <array>
#include <cstdint>

namespace tlq {

// murmur3 64-bit finalizer; bijective.
constexpr std::uint64_t mix64(std::uint64_t x) {
    x ^= x >> 33;
    x *= 0xff51afd7ed558ccdULL;
    x ^= x >> 33;
    x *= 0xc4ceb9fe1a85ec53ULL;
    x ^= x >> 33;
    return x;
}

struct SplitMix64 {
    std::uint64_t state;
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
};

// Identifies one reproducible draw sequence. Distinct stream_ids give
// independent streams; parallel work partitions never change the draws a
// given stream produces.
struct RngStream {
    std::uint64_t seed = 0;
    std::uint64_t stream_id = 0;
};

// xoshiro256++ (Blackman & Vigna). State per stream is derived from
// (seed, stream_id) through SplitMix64, the generator's recommended seeding
// procedure. One draw is consumed per simulation step.
struct Xoshiro256pp {
    std::array<std::uint64_t, 4> s;

    static Xoshiro256pp from_stream(RngStream stream) {
        SplitMix64 sm{mix64(stream.seed) ^ mix64(stream.stream_id * 0x9e3779b97f4a7c15ULL + 1)};
        Xoshiro256pp g;
        g.s = {sm.next(), sm.next(), sm.next(), sm.next()};
        if ((g.s[0] | g.s[1] | g.s[2] | g.s[3]) == 0) g.s[0] = 0x9e3779b97f4a7c15ULL;
        return g;
    }

    static constexpr std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(s[0] + s[3], 23) + s[0];
        const std::uint64_t t = s[1] << 17;
        s[2] ^= s[0];
        s[3] ^= s[1];
        s[1] ^= s[2];
        s[0] ^= s[3];
        s[2] ^= t;
        s[3] = rotl(s[3], 45);
        return result;
    }
};

}  // namespace tlq
