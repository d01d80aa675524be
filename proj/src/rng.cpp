#include "hostcap/rng.hpp"

#include <cmath>
#include <numbers>

#include "hostcap/common.hpp"

namespace hostcap {

std::uint64_t SplitMix64::below(std::uint64_t n) {
    require(n > 0, "SplitMix64::below: n must be positive");
    std::uint64_t threshold = (0ULL - n) % n;  // 2^64 mod n
    for (;;) {
        std::uint64_t x = next_u64();
        if (x >= threshold) return x % n;
    }
}

std::uint64_t seed_combine(std::uint64_t h, std::uint64_t v) {
    return mix64(h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2)));
}

std::uint64_t seed_combine(std::uint64_t h, std::string_view s) {
    // FNV-1a over the bytes, folded into the running hash.
    std::uint64_t f = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        f ^= c;
        f *= 0x100000001b3ULL;
    }
    return seed_combine(h, f);
}

double sample_standard_normal(SplitMix64& rng) {
    // u1 in (0, 1] guards the log; the sine mate is discarded so the
    // stream position depends only on the number of calls.
    double u1 = 1.0 - rng.next_double();
    double u2 = rng.next_double();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
}

double sample_chi_squared(SplitMix64& rng, int df) {
    require(df >= 1, "chi-squared degrees of freedom must be >= 1");
    double sum = 0.0;
    for (int i = 0; i < df; ++i) {
        double z = sample_standard_normal(rng);
        sum += z * z;
    }
    return sum;
}

}  // namespace hostcap
