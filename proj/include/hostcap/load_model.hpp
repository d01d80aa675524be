#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hostcap/time_grid.hpp"

namespace hostcap {

// Parses "YYYY-MM-DD" and returns the month, validating the shape of the
// string (no full calendar check).
int month_of_date(const std::string& iso_date);

// One day of average-power readings for a transformer. Values may be
// negative when rooftop PV exports exceed consumption.
struct LoadProfile {
    std::string transformer_id;
    std::string date;     // ISO-8601 calendar date
    Eigen::ArrayXd kw;    // one average-kW reading per slot

    int month() const { return month_of_date(date); }
    void validate(const TimeGrid& grid = TimeGrid::standard()) const;
};

struct Transformer {
    std::string id;
    double capacity_kw = 0.0;  // nameplate kVA used as a kW limit (unity pf)
    int customer_count = 0;
    std::vector<LoadProfile> profiles;

    void validate(const TimeGrid& grid = TimeGrid::standard()) const;
    const LoadProfile& profile_on(const std::string& date) const;
    std::vector<std::string> dates_in_month(int month) const;  // sorted
};

// capacity - load, elementwise; negative entries mean the base load alone
// exceeds the limit.
Eigen::ArrayXd headroom(const LoadProfile& profile, double capacity_kw);

// Target EV count per transformer: one EV for every two households,
// rounded up.
int desired_ev_count(int customer_count);

}  // namespace hostcap
