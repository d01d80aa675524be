#pragma once

#include "hostcap/schedule.hpp"

namespace hostcap {

// True when the instance is small enough for exhaustive enumeration:
// N <= 2 on a grid of at most 24 slots, or a single EV on up to 96 slots
// with a turn-on budget of at most 2.
bool oracle_can_handle(const Scenario& scenario);

// Exhaustive reference optimizer. Enumerates every valid run placement per
// EV and picks the cheapest compatible assignment with the same tie-break
// as the solver (lexicographically smallest flattened kappa). Shares the
// scenario discretization with the solver but none of its search machinery.
// Throws std::invalid_argument if the instance exceeds the size bounds.
CoordinationResult brute_force_oracle(const Scenario& scenario);

}  // namespace hostcap
