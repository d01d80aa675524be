#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hostcap/commute_pmf.hpp"
#include "hostcap/ev_model.hpp"
#include "hostcap/load_model.hpp"
#include "hostcap/soc_model.hpp"
#include "hostcap/tariff.hpp"

namespace hostcap {

// One EV's requirements for the day: SOC targets, the slots it is away
// from home, and the energy demand implied by the SOC gap.
struct EvSession {
    int ev_index = 0;
    double initial_soc = 0.0;
    double final_soc = 0.0;
    double battery_kwh = 0.0;
    std::vector<int> unavailable_slots;  // sorted, unique
    double energy_demand_kwh = 0.0;

    // Computes energy_demand_kwh from the SOC gap so the invariant holds by
    // construction.
    static EvSession make(int ev_index, double initial_soc, double final_soc,
                          double battery_kwh,
                          std::vector<int> unavailable_slots);

    void validate(const TimeGrid& grid) const;
    bool is_unavailable(int slot) const;
};

// A complete solvable coordination instance.
struct Scenario {
    TimeGrid grid;
    LoadProfile profile;
    double capacity_kw = 0.0;
    ChargerSpec charger;
    std::vector<EvSession> sessions;
    CoordinationParams params;
    TouTariff tariff;
    int month = 1;
    std::uint64_t seed = 0;

    int num_evs() const { return static_cast<int>(sessions.size()); }
    void validate() const;
};

// Samples n_evs sessions from the commute PMF and SOC laws. Each EV draws
// from its own substream hash(seed, transformer_id, date, ev_index), so the
// result is a pure function of the arguments under any execution order.
Scenario make_scenario(const Transformer& transformer, const std::string& date,
                       const ChargerSpec& charger, int n_evs,
                       const JointCommutePmf& pmf, const SocDistributions& socs,
                       const EvSpec& ev, const CoordinationParams& params,
                       const TouTariff& tariff, std::uint64_t seed);

}  // namespace hostcap
