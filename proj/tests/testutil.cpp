#include "testutil.hpp"

#include <cmath>
#include <cstdio>

#include "hostcap/rng.hpp"

namespace hostcap::testutil {

std::string data_path(const std::string& name) {
    return std::string(HOSTCAP_DATA_DIR) + "/" + name;
}

std::string cli_path() { return HOSTCAP_CLI_PATH; }

TouTariff flat_tariff(double price_cents, int num_slots) {
    TouTariff t;
    t.num_slots = num_slots;
    t.seasons.push_back({{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12},
                         {{0, 0, price_cents}}});
    t.validate();
    return t;
}

TouTariff two_band_tariff(int num_slots, int peak_start, int peak_end,
                          double off_price, double peak_price) {
    TouTariff t;
    t.num_slots = num_slots;
    t.seasons.push_back({{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12},
                         {{peak_start, peak_end, peak_price},
                          {peak_end, peak_start, off_price}}});
    t.validate();
    return t;
}

Scenario raw_scenario(const TimeGrid& grid, const Eigen::ArrayXd& load_kw,
                      double capacity_kw, double charger_kw,
                      std::vector<EvSession> sessions,
                      const CoordinationParams& params, TouTariff tariff,
                      int month, std::uint64_t seed) {
    Scenario sc;
    sc.grid = grid;
    sc.profile.transformer_id = "TEST";
    sc.profile.date = "2024-07-15";
    if (month != 7) {
        char date[16];
        std::snprintf(date, sizeof date, "2024-%02d-15", month);
        sc.profile.date = date;
    }
    sc.profile.kw = load_kw;
    sc.capacity_kw = capacity_kw;
    sc.charger.power_kw = charger_kw;
    sc.sessions = std::move(sessions);
    sc.params = params;
    sc.tariff = std::move(tariff);
    sc.month = month;
    sc.seed = seed;
    sc.validate();
    return sc;
}

const JointCommutePmf& test_pmf() {
    static const JointCommutePmf pmf = [] {
        std::vector<TripRecord> trips{
            {5, 14, 2},  {5, 15, 2},  {6, 15, 3},  {6, 16, 4},  {6, 17, 5},
            {6, 18, 3},  {7, 15, 4},  {7, 16, 6},  {7, 17, 8},  {7, 18, 6},
            {7, 19, 3},  {7, 20, 1},  {8, 12, 2},  {8, 16, 5},  {8, 17, 7},
            {8, 18, 6},  {8, 19, 3},  {8, 20, 2},  {8, 21, 1},  {9, 17, 3},
            {9, 18, 3},  {9, 19, 2},  {9, 20, 1},  {10, 14, 1}, {10, 15, 1},
            {11, 13, 1},
        };
        return build_commute_pmf(trips, "test");
    }();
    return pmf;
}

Scenario random_tiny_scenario(std::uint64_t seed) {
    SplitMix64 rng(seed);
    TimeGrid grid = TimeGrid::hourly();
    const int t_max = grid.num_slots;

    double capacity = rng.uniform(20.0, 60.0);
    Eigen::ArrayXd load(t_max);
    // Mostly below capacity, occasionally above to exercise the
    // infeasible-by-base-load path.
    double load_ceiling = rng.next_double() < 0.08 ? 1.05 : 0.92;
    for (int t = 0; t < t_max; ++t) {
        load[t] = capacity * rng.uniform(0.1, load_ceiling);
    }

    double charger = rng.next_double() < 0.5 ? 7.2 : 11.5;
    int n_evs = 1 + static_cast<int>(rng.below(2));
    std::vector<EvSession> sessions;
    for (int e = 0; e < n_evs; ++e) {
        int depart = static_cast<int>(rng.below(20));
        int len = 1 + static_cast<int>(rng.below(
                          static_cast<std::uint64_t>(t_max - depart)));
        std::vector<int> away;
        for (int t = depart; t < depart + len; ++t) away.push_back(t);
        int req_target = 1 + static_cast<int>(rng.below(8));
        double demand = charger * grid.slot_hours *
                        (req_target - rng.uniform(0.0, 0.9));
        double battery = 200.0;
        double initial = 0.2;
        sessions.push_back(EvSession::make(e, initial,
                                           initial + demand / battery, battery,
                                           std::move(away)));
    }

    CoordinationParams params;
    params.tau_min = 2;
    params.max_switches = 2;
    params.time_limit_seconds = 30.0;

    TouTariff tariff = two_band_tariff(t_max, 14, 20, rng.uniform(5.0, 15.0),
                                       rng.uniform(15.0, 40.0));
    return raw_scenario(grid, load, capacity, charger, std::move(sessions),
                        params, std::move(tariff), 7, seed);
}

Scenario random_full_scenario(std::uint64_t seed, int max_evs) {
    SplitMix64 rng(seed);
    int month = rng.next_double() < 0.5 ? 3 : 7;
    double capacity = rng.next_double() < 0.5 ? 50.0 : 75.0;

    Transformer tr;
    tr.id = "F" + std::to_string(seed % 1000);
    tr.capacity_kw = capacity;
    tr.customer_count = 2 * max_evs;
    SynthProfileSpec spec;
    spec.archetype = month == 7 ? ProfileArchetype::JulyLike
                                : ProfileArchetype::MarchLike;
    spec.capacity_kw = capacity;
    spec.customer_count = tr.customer_count;
    spec.seed = seed_combine(seed, std::uint64_t{11});
    char date[16];
    std::snprintf(date, sizeof date, "2024-%02d-15", month);
    tr.profiles.push_back(synth_profile(spec, tr.id, date));

    ChargerSpec charger{rng.next_double() < 0.5 ? 7.2 : 11.5};
    int n_evs = 1 + static_cast<int>(rng.below(
                        static_cast<std::uint64_t>(max_evs)));
    CoordinationParams params;
    params.time_limit_seconds = 30.0;
    return make_scenario(tr, date, charger, n_evs, test_pmf(),
                         SocDistributions{}, EvSpec{}, params,
                         srp_default_tariff(), seed);
}

namespace {

// Hourly base load shape shared by the fixed-window fixtures: quiet night,
// moderate day, heavy evening. Values in kW against a 50 kW limit.
double blocked_day_hourly_load(int hour) {
    if (hour < 8) return 20.0;   // night
    if (hour < 16) return 25.0;  // workday (EVs away anyway)
    if (hour < 21) return 40.0;  // evening peak
    return 25.0;                 // late evening
}

}  // namespace

Scenario blocked_day_scenario(int n_evs, double charger_kw, double energy_kwh) {
    TimeGrid grid = TimeGrid::standard();
    Eigen::ArrayXd load(grid.num_slots);
    for (int t = 0; t < grid.num_slots; ++t) {
        load[t] = blocked_day_hourly_load(t / 4);
    }
    std::vector<EvSession> sessions;
    for (int e = 0; e < n_evs; ++e) {
        std::vector<int> away;
        for (int t = 32; t < 64; ++t) away.push_back(t);  // 8 AM - 4 PM
        double battery = 100.0;
        sessions.push_back(EvSession::make(e, 0.2, 0.2 + energy_kwh / battery,
                                           battery, std::move(away)));
    }
    CoordinationParams params;
    params.time_limit_seconds = 60.0;
    return raw_scenario(grid, load, 50.0, charger_kw, std::move(sessions),
                        params, srp_default_tariff(), 7, 4242);
}

Scenario blocked_day_scenario_hourly(int n_evs, double charger_kw,
                                     double energy_kwh) {
    TimeGrid grid = TimeGrid::hourly();
    Eigen::ArrayXd load(grid.num_slots);
    for (int t = 0; t < grid.num_slots; ++t) {
        load[t] = blocked_day_hourly_load(t);
    }
    std::vector<EvSession> sessions;
    for (int e = 0; e < n_evs; ++e) {
        std::vector<int> away;
        for (int t = 8; t < 16; ++t) away.push_back(t);
        double battery = 100.0;
        sessions.push_back(EvSession::make(e, 0.2, 0.2 + energy_kwh / battery,
                                           battery, std::move(away)));
    }
    CoordinationParams params;
    params.tau_min = 1;
    params.time_limit_seconds = 60.0;
    TouTariff tariff = two_band_tariff(grid.num_slots, 14, 20, 9.06, 25.85);
    return raw_scenario(grid, load, 50.0, charger_kw, std::move(sessions),
                        params, std::move(tariff), 7, 4242);
}

}  // namespace hostcap::testutil
