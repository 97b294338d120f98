#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace fintrade {

/// Seeded random source. All distributions are implemented by hand on top of
/// mt19937_64 so that streams are reproducible across standard libraries
/// (std::uniform_int_distribution and friends are implementation-defined).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform double in [0, 1).
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Uniform index in [0, n). n must be >= 1.
    std::size_t uniform_index(std::size_t n) {
        const std::uint64_t bound = static_cast<std::uint64_t>(n);
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x = engine_();
        while (x >= limit) x = engine_();
        return static_cast<std::size_t>(x % bound);
    }

    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform01();
    }

    /// Standard normal via Box-Muller. Two uniforms consumed per draw; the
    /// sine partner is discarded to keep the stream position predictable.
    double normal() {
        const double u1 = static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53; // (0, 1]
        const double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

    /// Derive an independent child stream; used to give subsystems their own
    /// sequence without coupling to draw order elsewhere.
    Rng split(std::uint64_t stream) {
        std::uint64_t s = engine_() ^ (0x9e3779b97f4a7c15ULL * (stream + 1));
        return Rng(s);
    }

private:
    std::mt19937_64 engine_;
};

} // namespace fintrade
