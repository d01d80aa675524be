#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <Eigen/Dense>

#include "hostcap/scenario.hpp"

namespace hostcap {

// Binary charging matrix kappa (EV x slot) with the quantities derived from
// it: per-slot EV charging power, per-EV delivered energy, and total cost
// under the scenario tariff.
struct ChargingSchedule {
    Eigen::ArrayXXi kappa;        // N x T, entries in {0, 1}
    Eigen::ArrayXd aggregate_kw;  // T: charger power drawn per slot
    Eigen::ArrayXd delivered_kwh; // N: energy delivered per EV
    double total_cost_cents = 0.0;

    static ChargingSchedule from_kappa(const Scenario& scenario,
                                       Eigen::ArrayXXi kappa);
};

// Turn-on indicators recomputed from kappa: omega(n, 0) = kappa(n, 0), and
// omega(n, t) = 1 iff kappa steps from 0 to 1 at t.
struct SwitchIndicators {
    Eigen::ArrayXXi omega;

    static SwitchIndicators from_kappa(const Eigen::ArrayXXi& kappa);
};

enum class SolveStatus { Feasible, Infeasible, Unresolved };

const char* to_string(SolveStatus status);

struct SolveStats {
    std::uint64_t nodes_explored = 0;
    double wall_time_seconds = 0.0;
};

struct CoordinationResult {
    SolveStatus status = SolveStatus::Unresolved;
    std::optional<ChargingSchedule> schedule;  // present iff Feasible
    std::string proof_note;
    SolveStats stats;
};

}  // namespace hostcap
