#pragma once

#include <cstdint>

namespace nar {

// Counter-based random numbers: every draw is a pure hash of
// (seed, stream, realisation, time, agent, slot), so any sub-stream can be
// evaluated independently and reproducibly, in any order and in parallel.
namespace rng {

inline std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Stream tags keep unrelated draws (network wiring, initial states, dynamics)
// statistically independent for the same user seed.
enum Stream : std::uint64_t {
    kNetwork = 1,
    kInitialState = 2,
    kDynamics = 3,
    kGeneric = 4,
};

struct Key {
    std::uint64_t seed = 0;
    std::uint64_t stream = kGeneric;
    std::uint64_t realisation = 0;
    std::uint64_t time = 0;
    std::uint64_t agent = 0;
    std::uint64_t slot = 0;
};

inline std::uint64_t hash(const Key& k) {
    std::uint64_t h = mix(k.seed);
    h = mix(h ^ k.stream);
    h = mix(h ^ k.realisation);
    h = mix(h ^ k.time);
    h = mix(h ^ k.agent);
    h = mix(h ^ k.slot);
    return h;
}

// Uniform double in [0, 1) with 53 random bits.
inline double uniform(const Key& k) {
    return static_cast<double>(hash(k) >> 11) * 0x1.0p-53;
}

// Uniform integer in [0, n) via the multiply-shift reduction (bias < n/2^64).
inline std::uint64_t bounded(const Key& k, std::uint64_t n) {
    const unsigned __int128 wide = static_cast<unsigned __int128>(hash(k)) * n;
    return static_cast<std::uint64_t>(wide >> 64);
}

}  // namespace rng
}  // namespace nar
