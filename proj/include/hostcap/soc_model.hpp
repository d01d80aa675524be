#pragma once

#include "hostcap/common.hpp"
#include "hostcap/rng.hpp"

namespace hostcap {

// Initial SOC is uniform on [initial_low, initial_high]. Final SOC is a
// chi-squared draw shifted to final_floor, scaled by chi_scale, and capped
// at final_cap, so its density peaks at the floor and tapers toward the cap.
struct SocDistributions {
    double initial_low = 0.20;
    double initial_high = 0.30;
    double final_floor = 0.80;
    double final_cap = 1.00;
    int chi_df = 2;
    double chi_scale = 0.2 / 6.0;

    void validate() const {
        require(0.0 <= initial_low && initial_low < initial_high &&
                    initial_high < final_floor && final_floor < final_cap &&
                    final_cap <= 1.0,
                "SocDistributions: need 0 <= low < high < floor < cap <= 1");
        require(chi_df >= 1, "SocDistributions: chi_df must be >= 1");
        require(chi_scale > 0.0, "SocDistributions: chi_scale must be positive");
    }
};

double sample_initial_soc(const SocDistributions& dist, SplitMix64& rng);
double sample_final_soc(const SocDistributions& dist, SplitMix64& rng);

}  // namespace hostcap
