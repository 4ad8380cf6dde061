#pragma once

#include <cstdint>
#include <random>

namespace rydswap {

// Deterministic sub-stream seeding: every Monte Carlo sample owns the stream
// derived from (seed, index), so results do not depend on scheduling.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    static Rng substream(std::uint64_t seed, std::uint64_t index) {
        return Rng(mix_seed(seed, index));
    }

    // Uniform in [0, 1). mt19937_64 output is fully specified by the
    // standard, so draws are reproducible across platforms.
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Box-Muller; avoids the implementation-defined std::normal_distribution.
    double normal() {
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
    }

    double normal(double mean, double sigma) { return mean + sigma * normal(); }

    std::uint64_t bits() { return engine_(); }

    // Uniform integer in [0, n).
    std::size_t index(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }

private:
    std::mt19937_64 engine_;
};

}  // namespace rydswap
