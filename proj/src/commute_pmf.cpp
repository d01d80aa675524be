#include "hostcap/commute_pmf.hpp"

#include <cmath>

#include "hostcap/common.hpp"

namespace hostcap {

void JointCommutePmf::validate() const {
    require(hour_bins.rows() == 24 && hour_bins.cols() == 24,
            "JointCommutePmf: bins must be 24x24");
    double total = 0.0;
    for (int d = 0; d < 24; ++d) {
        for (int r = 0; r < 24; ++r) {
            double p = hour_bins(d, r);
            require(p >= 0.0, "JointCommutePmf: negative probability");
            require(std::isfinite(p), "JointCommutePmf: non-finite probability");
            if (r <= d) {
                require(p == 0.0,
                        "JointCommutePmf: mass at return_hour <= depart_hour");
            }
            total += p;
        }
    }
    require(std::abs(total - 1.0) <= 1e-9,
            "JointCommutePmf: probabilities must sum to 1");
}

JointCommutePmf build_commute_pmf(std::span<const TripRecord> trips,
                                  std::string tag,
                                  TripValidationSummary* summary) {
    require(!trips.empty(), "build_commute_pmf: empty trip list");
    TripValidationSummary local;
    JointCommutePmf pmf;
    pmf.tag = std::move(tag);
    double total = 0.0;
    for (const TripRecord& t : trips) {
        if (t.depart_hour < 0 || t.depart_hour > 23 || t.return_hour < 0 ||
            t.return_hour > 23) {
            ++local.rejected_bad_hour;
            continue;
        }
        if (!(t.weight > 0.0) || !std::isfinite(t.weight)) {
            ++local.rejected_bad_weight;
            continue;
        }
        if (t.return_hour <= t.depart_hour) {
            ++local.rejected_overnight;
            continue;
        }
        pmf.hour_bins(t.depart_hour, t.return_hour) += t.weight;
        total += t.weight;
        ++local.accepted;
    }
    if (summary != nullptr) *summary = local;
    require(local.accepted > 0, "build_commute_pmf: no valid trip records");
    pmf.hour_bins /= total;
    pmf.validate();
    return pmf;
}

std::pair<int, int> sample_away_hours(const JointCommutePmf& pmf,
                                      SplitMix64& rng) {
    double u = rng.next_double();
    double acc = 0.0;
    int last_d = -1;
    int last_r = -1;
    for (int d = 0; d < 24; ++d) {
        for (int r = d + 1; r < 24; ++r) {
            double p = pmf.hour_bins(d, r);
            if (p <= 0.0) continue;
            acc += p;
            last_d = d;
            last_r = r;
            if (u < acc) return {d, r};
        }
    }
    // u landed in the rounding sliver past the accumulated total.
    require(last_d >= 0, "sample_away_hours: PMF has no mass");
    return {last_d, last_r};
}

AwayInterval sample_away_interval(const JointCommutePmf& pmf, SplitMix64& rng) {
    auto [d, r] = sample_away_hours(pmf, rng);
    return {d * 4, r * 4};
}

}  // namespace hostcap
