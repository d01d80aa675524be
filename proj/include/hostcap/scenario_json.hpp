#pragma once

#include <string>

#include "hostcap/schedule.hpp"

namespace hostcap {

// Single-document scenario serialization for replay: grid, tariff,
// profile, charger, params, and sessions.
void save_scenario_json(const Scenario& scenario, const std::string& path);
Scenario load_scenario_json(const std::string& path);

// Schedule CSV: one row per (ev_index, slot) cell with its kappa value.
void write_schedule_csv(const ChargingSchedule& schedule,
                        const std::string& path);

// Result metadata: status, cost (when feasible), note, solve stats.
void write_result_json(const CoordinationResult& result,
                       const std::string& path);

}  // namespace hostcap
