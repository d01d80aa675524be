#pragma once

#include "hostcap/schedule.hpp"

namespace hostcap {

// Exact coordinator. Finds a minimum-cost feasible charging matrix for the
// scenario, or proves that none exists. Among equal-cost optima the result
// is the lexicographically smallest flattened kappa (EV-major, slot-minor),
// so the output is a pure function of the scenario.
//
// The search budget is derived from params.time_limit_seconds as a
// deterministic node allowance, so identical scenarios resolve identically
// on any machine or worker count; budget exhaustion yields Unresolved,
// never a misreported Infeasible.
CoordinationResult solve(const Scenario& scenario);

}  // namespace hostcap
