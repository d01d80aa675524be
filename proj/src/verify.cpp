#include "hostcap/verify.hpp"

#include "hostcap/common.hpp"

namespace hostcap {

const char* to_string(ViolationKind kind) {
    switch (kind) {
        case ViolationKind::Capacity: return "capacity";
        case ViolationKind::Demand: return "demand";
        case ViolationKind::Availability: return "availability";
        case ViolationKind::RunLength: return "run-length";
        case ViolationKind::SwitchBudget: return "switch-budget";
    }
    return "unknown";
}

std::vector<Violation> verify_schedule(const Scenario& scenario,
                                       const ChargingSchedule& schedule) {
    const int n_evs = scenario.num_evs();
    const int t_max = scenario.grid.num_slots;
    require(schedule.kappa.rows() == n_evs && schedule.kappa.cols() == t_max,
            "verify_schedule: kappa dimensions do not match the scenario");

    std::vector<Violation> out;
    const auto& kappa = schedule.kappa;
    const double nu = scenario.charger.power_kw;
    const double dt = scenario.grid.slot_hours;

    // Transformer capacity, slot by slot.
    const double cap_tol = abs_tol(scenario.capacity_kw);
    for (int t = 0; t < t_max; ++t) {
        int on = 0;
        for (int ev = 0; ev < n_evs; ++ev) on += kappa(ev, t) != 0 ? 1 : 0;
        double total = nu * on + scenario.profile.kw[t];
        if (total > scenario.capacity_kw + cap_tol) {
            out.push_back({ViolationKind::Capacity, -1, t,
                           "slot " + std::to_string(t) + ": " +
                               std::to_string(total) + " kW exceeds " +
                               std::to_string(scenario.capacity_kw) + " kW"});
        }
    }

    for (int ev = 0; ev < n_evs; ++ev) {
        const EvSession& session = scenario.sessions[static_cast<std::size_t>(ev)];

        // Energy demand.
        int slots_on = 0;
        for (int t = 0; t < t_max; ++t) slots_on += kappa(ev, t) != 0 ? 1 : 0;
        double delivered = nu * dt * slots_on;
        if (delivered <
            session.energy_demand_kwh - abs_tol(session.energy_demand_kwh)) {
            out.push_back({ViolationKind::Demand, ev, -1,
                           "EV " + std::to_string(ev) + ": delivered " +
                               std::to_string(delivered) + " kWh of " +
                               std::to_string(session.energy_demand_kwh) +
                               " kWh"});
        }

        // Availability.
        for (int t : session.unavailable_slots) {
            if (kappa(ev, t) != 0) {
                out.push_back({ViolationKind::Availability, ev, t,
                               "EV " + std::to_string(ev) +
                                   " charges while away at slot " +
                                   std::to_string(t)});
            }
        }

        // Run lengths and turn-on count over maximal runs of 1s.
        int turn_ons = 0;
        int run_start = -1;
        for (int t = 0; t <= t_max; ++t) {
            bool on = t < t_max && kappa(ev, t) != 0;
            if (on && run_start < 0) {
                run_start = t;
                ++turn_ons;
            } else if (!on && run_start >= 0) {
                int len = t - run_start;
                if (len < scenario.params.tau_min) {
                    out.push_back(
                        {ViolationKind::RunLength, ev, run_start,
                         "EV " + std::to_string(ev) + ": run of " +
                             std::to_string(len) + " slot(s) at slot " +
                             std::to_string(run_start) + " is shorter than " +
                             std::to_string(scenario.params.tau_min)});
                }
                run_start = -1;
            }
        }
        if (turn_ons > scenario.params.max_switches) {
            out.push_back({ViolationKind::SwitchBudget, ev, -1,
                           "EV " + std::to_string(ev) + ": " +
                               std::to_string(turn_ons) +
                               " turn-ons exceed the budget of " +
                               std::to_string(scenario.params.max_switches)});
        }
    }
    return out;
}

}  // namespace hostcap
