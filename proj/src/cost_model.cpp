#include "hostcap/cost_model.hpp"

#include <cmath>

#include "hostcap/common.hpp"

namespace hostcap {

SlotCostModel SlotCostModel::build(const Scenario& scenario) {
    SlotCostModel m;
    const double nu = scenario.charger.power_kw;
    const double dt = scenario.grid.slot_hours;
    m.cents = nu * dt * price_curve(scenario.tariff, scenario.month);
    const double max_c = m.cents.maxCoeff();
    require(max_c > 0.0, "SlotCostModel: slot costs must be positive");
    // Scale so max_c lands near 2^42; ldexp by an integer exponent is exact.
    const int exponent = 42 - std::ilogb(max_c);
    m.quantized.resize(static_cast<std::size_t>(m.cents.size()));
    for (Eigen::Index t = 0; t < m.cents.size(); ++t) {
        m.quantized[static_cast<std::size_t>(t)] =
            std::llround(std::ldexp(m.cents[t], exponent));
    }
    return m;
}

std::vector<int> slot_ev_caps(const Scenario& scenario, int* overload_slot) {
    const int t_max = scenario.grid.num_slots;
    const int n = scenario.num_evs();
    const double nu = scenario.charger.power_kw;
    const double tol = abs_tol(scenario.capacity_kw);
    std::vector<int> caps(static_cast<std::size_t>(t_max), 0);
    if (overload_slot != nullptr) *overload_slot = -1;
    for (int t = 0; t < t_max; ++t) {
        double head = scenario.capacity_kw - scenario.profile.kw[t];
        if (head < -tol) {
            if (overload_slot != nullptr && *overload_slot < 0) {
                *overload_slot = t;
            }
            caps[static_cast<std::size_t>(t)] = -1;
            continue;
        }
        int cap = static_cast<int>(std::floor((head + tol) / nu));
        caps[static_cast<std::size_t>(t)] = cap < n ? cap : n;
    }
    return caps;
}

int required_charge_slots(const Scenario& scenario, const EvSession& session) {
    const double per_slot =
        scenario.charger.power_kw * scenario.grid.slot_hours;
    double needed = session.energy_demand_kwh - abs_tol(session.energy_demand_kwh);
    if (needed <= 0.0) return 0;
    return static_cast<int>(std::ceil(needed / per_slot));
}

}  // namespace hostcap
