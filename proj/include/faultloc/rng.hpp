#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace faultloc {

// Seeded RNG with distribution mappings implemented here instead of
// std::uniform_real_distribution, whose sample sequence is
// implementation-defined. Repeating a seeded run must reproduce results
// bit-for-bit, so the mapping from engine output to doubles is pinned.
class Rng {
public:
    explicit Rng(uint64_t seed) : seed_(seed), engine_(seed) {}

    uint64_t seed() const { return seed_; }

    uint64_t next_u64() { return engine_(); }

    /// Uniform on [0, 1).
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [0, n).
    uint64_t uniform_index(uint64_t n) {
        // Rejection sampling to avoid modulo bias.
        const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        uint64_t v;
        do {
            v = engine_();
        } while (v >= limit);
        return v % n;
    }

    /// Standard normal via Box-Muller. One value per call; the sine partner
    /// is discarded so the call count alone determines the stream position.
    double normal() {
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

    /// Derive an independent child stream. Per-sample substreams keep results
    /// independent of evaluation order.
    Rng child(uint64_t tag) const {
        uint64_t x = seed_ ^ (0x9e3779b97f4a7c15ULL * (tag + 1));
        x ^= x >> 30; x *= 0xbf58476d1ce4e5b9ULL;
        x ^= x >> 27; x *= 0x94d049bb133111ebULL;
        x ^= x >> 31;
        return Rng(x);
    }

private:
    uint64_t seed_;
    std::mt19937_64 engine_;
};

} // namespace faultloc
