#pragma once

#include <cstdint>
#include <string_view>

namespace vaaprobe {

// FNV-1a, used for content digests and for deriving per-key RNG streams.
constexpr std::uint64_t kFnvOffset = 1469598103934665603ULL;
constexpr std::uint64_t kFnvPrime = 1099511628211ULL;

constexpr std::uint64_t fnv1a64(std::string_view data, std::uint64_t h = kFnvOffset) {
    for (unsigned char c : data) {
        h ^= c;
        h *= kFnvPrime;
    }
    return h;
}

constexpr std::uint64_t fnv1a64_mix(std::uint64_t value, std::uint64_t h) {
    for (int i = 0; i < 8; ++i) {
        h ^= value & 0xffu;
        h *= kFnvPrime;
        value >>= 8;
    }
    return h;
}

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Deterministic counter-based generator. The same (seed, stream) pair yields
// the same sequence on every platform and under any evaluation order, which
// is what makes the parallel and serial code paths bit-identical.
class KeyedRng {
public:
    KeyedRng(std::uint64_t seed, std::uint64_t stream) : state_(seed ^ (stream * 0x9e3779b97f4a7c15ULL)) {
        // one warm-up step decorrelates nearby streams
        splitmix64(state_);
    }

    std::uint64_t next_u64() { return splitmix64(state_); }

    // uniform double in [0, 1) with 53 bits of entropy
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return next_double() < p; }

    // uniform integer in [0, n); modulo bias is negligible for the small n
    // used here (n <= a few hundred) against a 64-bit range
    std::uint32_t uniform_below(std::uint32_t n) {
        return static_cast<std::uint32_t>(next_u64() % n);
    }

private:
    std::uint64_t state_;
};

} // namespace vaaprobe
