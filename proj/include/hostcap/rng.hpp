#pragma once

#include <cstdint>
#include <string_view>

namespace hostcap {

// SplitMix64 finalizer; full-period 64-bit mixer.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Counter-based generator with splittable substreams. All draws are pure
// functions of the seed, so scenario sampling is reproducible under any
// worker count.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform on [0, 1).
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) {
        return lo + (hi - lo) * next_double();
    }

    // Uniform integer on [0, n). Rejection sampling keeps the draw unbiased.
    std::uint64_t below(std::uint64_t n);

private:
    std::uint64_t state_;
};

// Seed derivation for named substreams: hash(seed, parts...). The chain is
// hand-rolled (not std::hash) so streams are stable across platforms.
std::uint64_t seed_combine(std::uint64_t h, std::uint64_t v);
std::uint64_t seed_combine(std::uint64_t h, std::string_view s);

// Standard normal via Box-Muller on the generator's own uniforms.
double sample_standard_normal(SplitMix64& rng);

// Chi-squared with integer degrees of freedom (sum of df squared normals).
double sample_chi_squared(SplitMix64& rng, int df);

}  // namespace hostcap
