#pragma once

// Shared fixtures and instance generators for the unit and acceptance
// suites.

#include <string>
#include <vector>

#include "hostcap/commute_pmf.hpp"
#include "hostcap/scenario.hpp"
#include "hostcap/synth.hpp"

namespace hostcap::testutil {

std::string data_path(const std::string& name);
std::string cli_path();

// Single-band tariff covering every month at one price.
TouTariff flat_tariff(double price_cents, int num_slots);

// Two-band tariff (peak [peak_start, peak_end), off-peak wrap) for every
// month.
TouTariff two_band_tariff(int num_slots, int peak_start, int peak_end,
                          double off_price, double peak_price);

// Assembles a scenario from raw pieces without a Transformer.
Scenario raw_scenario(const TimeGrid& grid, const Eigen::ArrayXd& load_kw,
                      double capacity_kw, double charger_kw,
                      std::vector<EvSession> sessions,
                      const CoordinationParams& params, TouTariff tariff,
                      int month, std::uint64_t seed);

// Commute PMF used across the suites: morning departures, afternoon and
// evening returns.
const JointCommutePmf& test_pmf();

// Random instance on a 24-slot hourly grid with tau_min 2, S 2, N <= 2.
// Mixes feasible, capacity-tight, and infeasible cases.
Scenario random_tiny_scenario(std::uint64_t seed);

// Random full-size instance: 96 slots, synthetic July/March profile,
// PMF-sampled availability, SOC-law demands, charger 7.2 or 11.5 kW.
Scenario random_full_scenario(std::uint64_t seed, int max_evs = 6);

// Fixed-window fixture in the style of a 50 kW summer transformer whose
// EVs are all away from 8 AM to 4 PM (slots 32..63), with identical
// sessions needing energy_kwh each.
Scenario blocked_day_scenario(int n_evs, double charger_kw, double energy_kwh);

// Hourly (24-slot) analog of blocked_day_scenario with tau_min 1.
Scenario blocked_day_scenario_hourly(int n_evs, double charger_kw,
                                     double energy_kwh);

}  // namespace hostcap::testutil
