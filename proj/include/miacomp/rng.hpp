#pragma once

#include <cmath>
#include <cstdint>

namespace miacomp::mc {

// splitmix64 finalizer: the avalanche step used both for stream stepping and
// for deriving independent per-trial seeds.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// One seed per (root, scenario tag, trial index): trials are mutually
// independent streams and any trial can be generated in isolation, which is
// what makes chunked parallel runs bit-identical to serial ones.
inline std::uint64_t derive_seed(std::uint64_t root, std::uint64_t tag, std::uint64_t index) {
    std::uint64_t s = mix64(root ^ (tag * 0xd6e8feb86659fd93ULL));
    return mix64(s ^ (index * 0xa5a3564e1fb2fa9bULL));
}

// Minimal counter-style generator. Hand-rolled variates (not <random>
// distributions) so results are bit-identical across platforms and compilers.
class StreamRng {
public:
    explicit StreamRng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform on (0, 1]: never 0, so log() below is always finite
    double uniform01() {
        return static_cast<double>((next_u64() >> 11) + 1) * 0x1p-53;
    }

    double exponential(double mean) { return -mean * std::log(uniform01()); }

private:
    std::uint64_t state_;
};

}  // namespace miacomp::mc
