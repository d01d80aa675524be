#include "hostcap/schedule.hpp"

#include "hostcap/common.hpp"

namespace hostcap {

ChargingSchedule ChargingSchedule::from_kappa(const Scenario& scenario,
                                              Eigen::ArrayXXi kappa) {
    const int n = scenario.num_evs();
    const int t_max = scenario.grid.num_slots;
    require(kappa.rows() == n && kappa.cols() == t_max,
            "ChargingSchedule: kappa dimensions do not match the scenario");

    ChargingSchedule s;
    s.kappa = std::move(kappa);
    const double nu = scenario.charger.power_kw;
    const double dt = scenario.grid.slot_hours;

    s.aggregate_kw = nu * s.kappa.colwise().sum().cast<double>();
    s.delivered_kwh = nu * dt * s.kappa.rowwise().sum().cast<double>();

    // Fixed accumulation order (EV-major, slot-minor) keeps the reported
    // cost bitwise reproducible.
    Eigen::ArrayXd prices = price_curve(scenario.tariff, scenario.month);
    double cost = 0.0;
    for (int ev = 0; ev < n; ++ev) {
        for (int t = 0; t < t_max; ++t) {
            if (s.kappa(ev, t) != 0) cost += nu * dt * prices[t];
        }
    }
    s.total_cost_cents = cost;
    return s;
}

SwitchIndicators SwitchIndicators::from_kappa(const Eigen::ArrayXXi& kappa) {
    SwitchIndicators ind;
    ind.omega = Eigen::ArrayXXi::Zero(kappa.rows(), kappa.cols());
    for (Eigen::Index ev = 0; ev < kappa.rows(); ++ev) {
        for (Eigen::Index t = 0; t < kappa.cols(); ++t) {
            int prev = t == 0 ? 0 : kappa(ev, t - 1);
            ind.omega(ev, t) = (kappa(ev, t) == 1 && prev == 0) ? 1 : 0;
        }
    }
    return ind;
}

const char* to_string(SolveStatus status) {
    switch (status) {
        case SolveStatus::Feasible: return "Feasible";
        case SolveStatus::Infeasible: return "Infeasible";
        case SolveStatus::Unresolved: return "Unresolved";
    }
    return "Unknown";
}

}  // namespace hostcap
