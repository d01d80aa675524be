#pragma once

#include "hostcap/time_grid.hpp"

namespace hostcap {

struct ChargerSpec {
    double power_kw = 7.2;

    void validate() const {
        require(power_kw > 0.0, "ChargerSpec: power must be positive");
    }
};

struct EvSpec {
    double battery_kwh = 100.0;
    double efficiency_mi_per_kwh = 3.6;  // informational

    void validate() const {
        require(battery_kwh > 0.0, "EvSpec: battery capacity must be positive");
    }
};

// Knobs of the coordination problem. alpha/beta parameterize the turn-on
// indicator linking rows; with the defaults (2, 1) the indicator is forced
// to 1 exactly on a 0->1 transition and 0 otherwise.
struct CoordinationParams {
    int tau_min = 4;          // minimum consecutive charging slots per run
    int max_switches = 4;     // turn-on budget S per EV per day
    double alpha = 2.0;
    double beta = 1.0;
    double mip_gap = 1e-6;
    double time_limit_seconds = 10.0;

    void validate(const TimeGrid& grid = TimeGrid::standard()) const {
        require(tau_min >= 1 && tau_min < grid.num_slots,
                "CoordinationParams: need 1 <= tau_min < num_slots");
        require(max_switches >= 1, "CoordinationParams: max_switches must be >= 1");
        require(beta > 0.0 && beta <= 1.0, "CoordinationParams: need 0 < beta <= 1");
        require(alpha >= 1.0 + beta, "CoordinationParams: need alpha >= 1 + beta");
        require(mip_gap >= 0.0, "CoordinationParams: mip_gap must be >= 0");
        require(time_limit_seconds > 0.0,
                "CoordinationParams: time limit must be positive");
    }
};

}  // namespace hostcap
