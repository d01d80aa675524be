#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>

#include <Eigen/Dense>

#include "hostcap/rng.hpp"

namespace hostcap {

struct TripRecord {
    int depart_hour = 0;
    int return_hour = 0;
    double weight = 1.0;
};

// Records dropped while building a PMF. Overnight trips (return <= depart)
// cannot be represented on a single-day grid and are counted rather than
// silently absorbed.
struct TripValidationSummary {
    std::size_t accepted = 0;
    std::size_t rejected_overnight = 0;
    std::size_t rejected_bad_weight = 0;
    std::size_t rejected_bad_hour = 0;

    std::size_t rejected() const {
        return rejected_overnight + rejected_bad_weight + rejected_bad_hour;
    }
};

// Joint distribution of (departure hour, return hour) for one commute per
// day. Mass strictly above the diagonal: return_hour > depart_hour.
struct JointCommutePmf {
    Eigen::ArrayXXd hour_bins{24, 24};  // (depart, return) -> probability
    std::string tag;                    // free-form demographic label

    JointCommutePmf() { hour_bins.setZero(); }
    void validate() const;
};

// Normalized weight tally per (depart, return) cell. Throws if no record
// survives validation.
JointCommutePmf build_commute_pmf(std::span<const TripRecord> trips,
                                  std::string tag = {},
                                  TripValidationSummary* summary = nullptr);

// Inverse-transform draw over the flattened (depart-major) PMF.
std::pair<int, int> sample_away_hours(const JointCommutePmf& pmf,
                                      SplitMix64& rng);

// Hours mapped onto the 96-slot grid: slot = hour * 4. The away interval
// is [depart_slot, return_slot).
struct AwayInterval {
    int depart_slot = 0;
    int return_slot = 0;
};

AwayInterval sample_away_interval(const JointCommutePmf& pmf, SplitMix64& rng);

}  // namespace hostcap
