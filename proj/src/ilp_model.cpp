#include "hostcap/ilp_model.hpp"

#include <cmath>

#include "hostcap/common.hpp"

namespace hostcap {

const char* to_string(RowKind kind) {
    switch (kind) {
        case RowKind::Capacity: return "capacity";
        case RowKind::SwitchLower: return "switch-lower";
        case RowKind::SwitchUpper: return "switch-upper";
        case RowKind::SwitchInit: return "switch-init";
        case RowKind::MinRunHead: return "min-run-head";
        case RowKind::MinRunBody: return "min-run-body";
        case RowKind::MinRunTail: return "min-run-tail";
        case RowKind::SwitchBudget: return "switch-budget";
        case RowKind::Demand: return "demand";
    }
    return "unknown";
}

IlpModel build_ilp(const Scenario& scenario) {
    scenario.validate();
    IlpModel m;
    m.num_evs = scenario.num_evs();
    m.num_slots = scenario.grid.num_slots;
    const int n_evs = m.num_evs;
    const int t_max = m.num_slots;
    const double nu = scenario.charger.power_kw;
    const double dt = scenario.grid.slot_hours;
    const double alpha = scenario.params.alpha;
    const double beta = scenario.params.beta;
    const int tau_min = scenario.params.tau_min;

    // Objective: nu * dt * p[t] per kappa, zero per omega.
    Eigen::ArrayXd prices = price_curve(scenario.tariff, scenario.month);
    m.objective = Eigen::ArrayXd::Zero(m.num_vars());
    for (int ev = 0; ev < n_evs; ++ev) {
        for (int t = 0; t < t_max; ++t) {
            m.objective[m.kappa_var(ev, t)] = nu * dt * prices[t];
        }
    }

    // Capacity per slot.
    for (int t = 0; t < t_max; ++t) {
        LinearRow row{RowKind::Capacity, -1, t, '<',
                      scenario.capacity_kw - scenario.profile.kw[t], {}};
        for (int ev = 0; ev < n_evs; ++ev) {
            row.terms.push_back({m.kappa_var(ev, t), nu});
        }
        m.rows.push_back(std::move(row));
    }

    for (int ev = 0; ev < n_evs; ++ev) {
        const EvSession& session = scenario.sessions[static_cast<std::size_t>(ev)];

        // Turn-on linking rows for t >= 1.
        for (int t = 1; t < t_max; ++t) {
            m.rows.push_back({RowKind::SwitchLower, ev, t, '<', alpha - beta,
                              {{m.kappa_var(ev, t - 1), 1.0},
                               {m.kappa_var(ev, t), -1.0},
                               {m.omega_var(ev, t), alpha}}});
            m.rows.push_back({RowKind::SwitchUpper, ev, t, '<', 0.0,
                              {{m.kappa_var(ev, t), 1.0},
                               {m.kappa_var(ev, t - 1), -1.0},
                               {m.omega_var(ev, t), -alpha}}});
        }
        // Initial slot: omega equals kappa.
        m.rows.push_back({RowKind::SwitchInit, ev, 0, '=', 0.0,
                          {{m.omega_var(ev, 0), 1.0},
                           {m.kappa_var(ev, 0), -1.0}}});

        // A run touching slot 0 covers the first tau_min slots.
        for (int t = 0; t < tau_min; ++t) {
            m.rows.push_back({RowKind::MinRunHead, ev, t, '<', 0.0,
                              {{m.kappa_var(ev, 0), 1.0},
                               {m.kappa_var(ev, t), -1.0}}});
        }
        // A start at t keeps the next tau_min slots on.
        for (int t = 1; t <= t_max - tau_min; ++t) {
            for (int i = 0; i < tau_min; ++i) {
                m.rows.push_back({RowKind::MinRunBody, ev, t, '<', 0.0,
                                  {{m.kappa_var(ev, t), 1.0},
                                   {m.kappa_var(ev, t - 1), -1.0},
                                   {m.kappa_var(ev, t + i), -1.0}}});
            }
        }
        // Non-increasing tail: no start later than t_max - tau_min, so the
        // final run, if any, still reaches full length by end of day.
        for (int t = t_max - tau_min; t <= t_max - 2; ++t) {
            if (t < 0) continue;
            m.rows.push_back({RowKind::MinRunTail, ev, t, '<', 0.0,
                              {{m.kappa_var(ev, t + 1), 1.0},
                               {m.kappa_var(ev, t), -1.0}}});
        }

        // Turn-on budget.
        {
            LinearRow row{RowKind::SwitchBudget, ev, -1, '<',
                          static_cast<double>(scenario.params.max_switches),
                          {}};
            for (int t = 0; t < t_max; ++t) {
                row.terms.push_back({m.omega_var(ev, t), 1.0});
            }
            m.rows.push_back(std::move(row));
        }

        // Energy demand, in kWh: the slot duration converts charger power
        // into energy per slot.
        {
            LinearRow row{RowKind::Demand, ev, -1, '>',
                          session.energy_demand_kwh, {}};
            for (int t = 0; t < t_max; ++t) {
                row.terms.push_back({m.kappa_var(ev, t), nu * dt});
            }
            m.rows.push_back(std::move(row));
        }

        // Availability fixings.
        for (int t : session.unavailable_slots) {
            m.fixed_zero_vars.push_back(m.kappa_var(ev, t));
        }
    }
    return m;
}

std::vector<std::string> check_against_model(const IlpModel& model,
                                             const Eigen::ArrayXXi& kappa,
                                             const Eigen::ArrayXXi& omega) {
    std::vector<std::string> messages;
    require(kappa.rows() == model.num_evs && kappa.cols() == model.num_slots &&
                omega.rows() == model.num_evs && omega.cols() == model.num_slots,
            "check_against_model: assignment dimensions mismatch");

    auto value_of = [&](int var) -> double {
        int nt = model.num_evs * model.num_slots;
        bool is_omega = var >= nt;
        int local = is_omega ? var - nt : var;
        int ev = local / model.num_slots;
        int t = local % model.num_slots;
        return is_omega ? omega(ev, t) : kappa(ev, t);
    };

    for (std::size_t i = 0; i < model.rows.size(); ++i) {
        const LinearRow& row = model.rows[i];
        double lhs = 0.0;
        for (const IlpTerm& term : row.terms) {
            lhs += term.coeff * value_of(term.var);
        }
        double tol = abs_tol(row.rhs);
        bool ok = row.sense == '<'   ? lhs <= row.rhs + tol
                  : row.sense == '>' ? lhs >= row.rhs - tol
                                     : std::abs(lhs - row.rhs) <= tol;
        if (!ok) {
            messages.push_back(std::string(to_string(row.kind)) + " row (ev=" +
                               std::to_string(row.ev) + ", slot=" +
                               std::to_string(row.slot) + "): lhs=" +
                               std::to_string(lhs) + " rhs=" +
                               std::to_string(row.rhs));
        }
    }
    for (int var : model.fixed_zero_vars) {
        if (value_of(var) != 0.0) {
            messages.push_back("fixing violated: variable " +
                               std::to_string(var) + " must be 0");
        }
    }
    return messages;
}

}  // namespace hostcap
