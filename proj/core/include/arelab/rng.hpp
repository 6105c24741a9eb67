#pragma once

#include <cstdint>
#include <random>

namespace arelab {

// splitmix64; used to whiten user seeds and to derive per-replicate streams.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Seed for replicate r of a run: counter-based so replicates can be computed
// in any order (or concurrently) with identical results.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t replicate) {
    return seed ^ splitmix64(replicate + 1);
}

// Thin deterministic wrapper around mt19937_64.  Uniform draws are produced
// directly from the raw 64-bit output so results do not depend on the
// standard library's distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

    // Uniform on [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // Uniform on (0, 1); rejects exact zero so quantile transforms stay finite.
    double uniform_open() {
        double u;
        do {
            u = uniform();
        } while (u == 0.0);
        return u;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    bool bernoulli(double p) { return uniform() < p; }

    std::uint64_t next_u64() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

}  // namespace arelab
