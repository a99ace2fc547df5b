#pragma once

#include <cstdint>
#include <random>

namespace graviton {

// splitmix64, the standard seed scrambler.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// RNG stream domains; combined with an index they name a stream.
enum class StreamDomain : std::uint64_t { Agent = 1, Feed = 2 };

// Independent stream per (master seed, domain, index): adding an agent or
// feed never perturbs the draws any other one sees.
inline std::mt19937_64 make_stream(std::uint64_t master, StreamDomain domain, std::uint64_t index) {
    const std::uint64_t mixed =
        splitmix64(master ^ splitmix64(static_cast<std::uint64_t>(domain) ^ splitmix64(index)));
    return std::mt19937_64(mixed);
}

// Uniform integer in [0, bound) via masked rejection. mt19937_64 output is
// fully specified by the standard and this rejection loop adds no
// platform-dependent arithmetic, so replays agree everywhere
// (std::uniform_int_distribution makes no such promise).
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound <= 1) return 0;
    std::uint64_t mask = bound - 1;
    mask |= mask >> 1;
    mask |= mask >> 2;
    mask |= mask >> 4;
    mask |= mask >> 8;
    mask |= mask >> 16;
    mask |= mask >> 32;
    for (;;) {
        const std::uint64_t v = rng() & mask;
        if (v < bound) return v;
    }
}

} // namespace graviton
