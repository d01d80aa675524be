#pragma once

#include <string>
#include <vector>

#include "hostcap/commute_pmf.hpp"

namespace hostcap {

// Trip CSV schema: depart_hour,return_hour,weight.
std::vector<TripRecord> load_trips_csv(const std::string& path);

// PMF JSON: {"tag": "...", "hour_bins": [[...24 rows of 24...]]}.
void save_pmf_json(const JointCommutePmf& pmf, const std::string& path);
JointCommutePmf load_pmf_json(const std::string& path);

}  // namespace hostcap
