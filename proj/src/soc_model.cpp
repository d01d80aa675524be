#include "hostcap/soc_model.hpp"

#include <algorithm>

namespace hostcap {

double sample_initial_soc(const SocDistributions& dist, SplitMix64& rng) {
    return rng.uniform(dist.initial_low, dist.initial_high);
}

double sample_final_soc(const SocDistributions& dist, SplitMix64& rng) {
    double x = sample_chi_squared(rng, dist.chi_df);
    return std::min(dist.final_floor + dist.chi_scale * x, dist.final_cap);
}

}  // namespace hostcap
