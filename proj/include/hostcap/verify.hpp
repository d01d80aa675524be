#pragma once

#include <string>
#include <vector>

#include "hostcap/schedule.hpp"

namespace hostcap {

enum class ViolationKind {
    Capacity,
    Demand,
    Availability,
    RunLength,
    SwitchBudget
};

const char* to_string(ViolationKind kind);

struct Violation {
    ViolationKind kind;
    int ev = -1;    // -1 for transformer-level findings
    int slot = -1;  // -1 when not tied to a slot
    std::string detail;
};

// Independent schedule checker. Walks the kappa matrix directly against the
// scenario's limits; shares no code with the solver. Empty result means the
// schedule satisfies capacity, per-EV demand (with the slot-duration energy
// factor), availability, minimum run length, and the turn-on budget
// (counting a run that starts at slot 0).
std::vector<Violation> verify_schedule(const Scenario& scenario,
                                       const ChargingSchedule& schedule);

}  // namespace hostcap
