#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "hostcap/scenario.hpp"

namespace hostcap {

// Shared discretization of a scenario for the exact search paths. Slot
// costs are quantized to integers so optimality comparisons and tie-breaks
// are exact and deterministic. The quantization scale is a power of two
// normalized by the largest slot cost, which makes the optimizer's choices
// invariant under power-of-two rescaling of all prices and accurate to
// ~2^-42 relative otherwise (far below the default mip_gap).
struct SlotCostModel {
    Eigen::ArrayXd cents;              // nu * slot_hours * p[t], per slot
    std::vector<std::int64_t> quantized;

    static SlotCostModel build(const Scenario& scenario);
};

// Per-slot cap on the number of simultaneously charging EVs implied by the
// transformer headroom: floor((C_max - load[t]) / nu) within tolerance,
// clamped to [0, N]. Returns the first slot where the base load alone
// exceeds capacity via overload_slot (or -1 if none).
std::vector<int> slot_ev_caps(const Scenario& scenario, int* overload_slot);

// Minimum number of charged slots that meets an EV's energy demand:
// ceil(D / (nu * slot_hours)) within tolerance.
int required_charge_slots(const Scenario& scenario, const EvSession& session);

}  // namespace hostcap
