#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>

namespace ersim::rng {

// Counter-based generator (Philox4x32-10). Each draw is a pure function of
// (seed, stream, c0, c1, c2), so ensembles are reproducible bitwise and
// independent of execution order.

namespace detail {

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo) {
    std::uint64_t p = static_cast<std::uint64_t>(a) * b;
    hi = static_cast<std::uint32_t>(p >> 32);
    lo = static_cast<std::uint32_t>(p);
}

inline std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> x,
                                               std::array<std::uint32_t, 2> key) {
    constexpr std::uint32_t M0 = 0xD2511F53u, M1 = 0xCD9E8D57u;
    constexpr std::uint32_t W0 = 0x9E3779B9u, W1 = 0xBB67AE85u;
    for (int round = 0; round < 10; ++round) {
        std::uint32_t hi0, lo0, hi1, lo1;
        mulhilo(M0, x[0], hi0, lo0);
        mulhilo(M1, x[2], hi1, lo1);
        x = {hi1 ^ x[1] ^ key[0], lo1, hi0 ^ x[3] ^ key[1], lo0};
        key[0] += W0;
        key[1] += W1;
    }
    return x;
}

inline double u01(std::uint32_t hi, std::uint32_t lo) {
    std::uint64_t v = (static_cast<std::uint64_t>(hi) << 32) | lo;
    return (static_cast<double>(v >> 11) + 0.5) * 0x1.0p-53;
}

} // namespace detail

/// Well separated stream ids for the independent randomness sources.
enum class Stream : std::uint32_t {
    Wiener = 1,
    Exponent = 2,
    InitialData = 3,
    TestFunctions = 4,
    Subsample = 5,
};

/// Two independent uniforms in (0,1) for the given counter.
inline std::array<double, 2> uniform2(std::uint64_t seed, Stream stream,
                                      std::uint64_t c0, std::uint64_t c1, std::uint64_t c2) {
    std::array<std::uint32_t, 4> ctr = {
        static_cast<std::uint32_t>(c0),
        static_cast<std::uint32_t>(c1),
        static_cast<std::uint32_t>(c2),
        static_cast<std::uint32_t>(stream),
    };
    std::array<std::uint32_t, 2> key = {
        static_cast<std::uint32_t>(seed),
        static_cast<std::uint32_t>(seed >> 32),
    };
    auto out = detail::philox4x32(ctr, key);
    return {detail::u01(out[0], out[1]), detail::u01(out[2], out[3])};
}

inline double uniform(std::uint64_t seed, Stream stream,
                      std::uint64_t c0, std::uint64_t c1, std::uint64_t c2) {
    return uniform2(seed, stream, c0, c1, c2)[0];
}

/// Standard normal via Box-Muller on the counter's uniform pair.
inline double normal(std::uint64_t seed, Stream stream,
                     std::uint64_t c0, std::uint64_t c1, std::uint64_t c2) {
    auto u = uniform2(seed, stream, c0, c1, c2);
    return std::sqrt(-2.0 * std::log(u[0])) * std::cos(2.0 * std::numbers::pi * u[1]);
}

} // namespace ersim::rng
