#pragma once

#include <cmath>

#include "hostcap/common.hpp"

namespace hostcap {

// Discretization of one day into equal slots. The default grid is 96 slots
// of 15 minutes; slot t covers clock time [t*slot_hours, (t+1)*slot_hours),
// slot 0 starting at midnight.
struct TimeGrid {
    int num_slots = 96;
    double slot_hours = 0.25;

    static TimeGrid standard() { return {}; }
    static TimeGrid hourly() { return {24, 1.0}; }

    void validate() const {
        require(num_slots >= 8, "TimeGrid: num_slots must be >= 8");
        require(slot_hours > 0.0, "TimeGrid: slot_hours must be positive");
        require(std::abs(num_slots * slot_hours - 24.0) <= 1e-9,
                "TimeGrid: num_slots * slot_hours must equal 24 hours");
    }

    bool operator==(const TimeGrid&) const = default;
};

}  // namespace hostcap
