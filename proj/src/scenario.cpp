#include "hostcap/scenario.hpp"

#include <algorithm>
#include <cmath>

#include "hostcap/common.hpp"

namespace hostcap {

EvSession EvSession::make(int ev_index, double initial_soc, double final_soc,
                          double battery_kwh,
                          std::vector<int> unavailable_slots) {
    EvSession s;
    s.ev_index = ev_index;
    s.initial_soc = initial_soc;
    s.final_soc = final_soc;
    s.battery_kwh = battery_kwh;
    std::sort(unavailable_slots.begin(), unavailable_slots.end());
    unavailable_slots.erase(
        std::unique(unavailable_slots.begin(), unavailable_slots.end()),
        unavailable_slots.end());
    s.unavailable_slots = std::move(unavailable_slots);
    s.energy_demand_kwh = (final_soc - initial_soc) * battery_kwh;
    return s;
}

void EvSession::validate(const TimeGrid& grid) const {
    require(battery_kwh > 0.0, "EvSession: battery capacity must be positive");
    // Equality means a zero-demand session, which directly constructed
    // instances may use; sampled sessions always have initial < final.
    require(initial_soc <= final_soc,
            "EvSession " + std::to_string(ev_index) +
                ": initial SOC must not exceed final SOC");
    require(std::abs(energy_demand_kwh -
                     (final_soc - initial_soc) * battery_kwh) <=
                abs_tol(energy_demand_kwh),
            "EvSession: energy demand inconsistent with SOC gap");
    for (std::size_t i = 0; i < unavailable_slots.size(); ++i) {
        int s = unavailable_slots[i];
        require(s >= 0 && s < grid.num_slots,
                "EvSession: unavailable slot out of range");
        if (i > 0) {
            require(unavailable_slots[i - 1] < s,
                    "EvSession: unavailable slots must be sorted and unique");
        }
    }
}

bool EvSession::is_unavailable(int slot) const {
    return std::binary_search(unavailable_slots.begin(),
                              unavailable_slots.end(), slot);
}

void Scenario::validate() const {
    grid.validate();
    profile.validate(grid);
    require(capacity_kw > 0.0, "Scenario: capacity must be positive");
    charger.validate();
    params.validate(grid);
    tariff.validate();
    require(tariff.num_slots == grid.num_slots,
            "Scenario: tariff grid does not match the scenario grid");
    require(month >= 1 && month <= 12, "Scenario: month out of range");
    require(!sessions.empty(), "Scenario: at least one session required");
    for (const auto& s : sessions) s.validate(grid);
}

Scenario make_scenario(const Transformer& transformer, const std::string& date,
                       const ChargerSpec& charger, int n_evs,
                       const JointCommutePmf& pmf, const SocDistributions& socs,
                       const EvSpec& ev, const CoordinationParams& params,
                       const TouTariff& tariff, std::uint64_t seed) {
    require(n_evs >= 1, "make_scenario: n_evs must be >= 1");
    TimeGrid grid = TimeGrid::standard();
    ev.validate();
    socs.validate();
    pmf.validate();

    Scenario sc;
    sc.grid = grid;
    sc.profile = transformer.profile_on(date);  // throws if date missing
    sc.capacity_kw = transformer.capacity_kw;
    sc.charger = charger;
    sc.params = params;
    sc.tariff = tariff;
    sc.month = month_of_date(date);
    sc.seed = seed;

    for (int i = 0; i < n_evs; ++i) {
        std::uint64_t sub = seed_combine(
            seed_combine(seed_combine(seed, transformer.id), date),
            static_cast<std::uint64_t>(i));
        SplitMix64 rng(sub);
        AwayInterval away = sample_away_interval(pmf, rng);
        double initial = sample_initial_soc(socs, rng);
        double final_soc = sample_final_soc(socs, rng);
        std::vector<int> unavailable;
        unavailable.reserve(static_cast<std::size_t>(away.return_slot - away.depart_slot));
        for (int s = away.depart_slot; s < away.return_slot; ++s) {
            unavailable.push_back(s);
        }
        sc.sessions.push_back(EvSession::make(i, initial, final_soc,
                                              ev.battery_kwh,
                                              std::move(unavailable)));
    }
    sc.validate();
    return sc;
}

}  // namespace hostcap
