#pragma once

#include <array>
#include <cstdint>

namespace pinchperf {

// Counter-based Philox 4x32-10 block cipher used as a splittable RNG.
// A draw is a pure function of (seed, stream, index), so Monte Carlo runs
// partition into blocks that any number of workers can evaluate in any
// order and still reproduce bit-identical results.
namespace philox {

inline constexpr std::uint32_t kW32A = 0x9E3779B9u;  // golden ratio
inline constexpr std::uint32_t kW32B = 0xBB67AE85u;  // sqrt(3) - 1
inline constexpr std::uint32_t kM4x32A = 0xD2511F53u;
inline constexpr std::uint32_t kM4x32B = 0xCD9E8D57u;

using Counter = std::array<std::uint32_t, 4>;
using Key = std::array<std::uint32_t, 2>;

inline void mul_hi_lo(std::uint32_t a, std::uint32_t b,
                      std::uint32_t& hi, std::uint32_t& lo) {
    const std::uint64_t p = static_cast<std::uint64_t>(a) * b;
    hi = static_cast<std::uint32_t>(p >> 32);
    lo = static_cast<std::uint32_t>(p);
}

inline Counter block(Counter ctr, Key key) {
    for (int round = 0; round < 10; ++round) {
        std::uint32_t hi0, lo0, hi1, lo1;
        mul_hi_lo(kM4x32A, ctr[0], hi0, lo0);
        mul_hi_lo(kM4x32B, ctr[2], hi1, lo1);
        ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
        key[0] += kW32A;
        key[1] += kW32B;
    }
    return ctr;
}

} // namespace philox

// One 128-bit block addressed by (seed, stream, index); the four 32-bit
// words are consumed as two 64-bit lanes.
struct RandomBlock {
    std::uint64_t lane0;
    std::uint64_t lane1;
};

inline RandomBlock random_block(std::uint64_t seed, std::uint64_t stream,
                                std::uint64_t index) {
    const philox::Counter ctr = {
        static_cast<std::uint32_t>(index),
        static_cast<std::uint32_t>(index >> 32),
        static_cast<std::uint32_t>(stream),
        static_cast<std::uint32_t>(stream >> 32),
    };
    const philox::Key key = {
        static_cast<std::uint32_t>(seed),
        static_cast<std::uint32_t>(seed >> 32),
    };
    const philox::Counter out = philox::block(ctr, key);
    return {
        (static_cast<std::uint64_t>(out[0]) << 32) | out[1],
        (static_cast<std::uint64_t>(out[2]) << 32) | out[3],
    };
}

// Uniform double in [0, 1) from the top 53 bits of a 64-bit lane.
inline double uniform53(std::uint64_t bits) {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

// (u, v) uniform pair for sample `index` of `stream`.
inline void uniform_pair(std::uint64_t seed, std::uint64_t stream,
                         std::uint64_t index, double& u, double& v) {
    const RandomBlock b = random_block(seed, stream, index);
    u = uniform53(b.lane0);
    v = uniform53(b.lane1);
}

} // namespace pinchperf
