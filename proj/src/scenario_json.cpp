#include "hostcap/scenario_json.hpp"

#include <fstream>

#include "hostcap/common.hpp"
#include "json_convert.hpp"

namespace hostcap {

void save_scenario_json(const Scenario& sc, const std::string& path) {
    nlohmann::json j;
    j["grid"] = {{"num_slots", sc.grid.num_slots},
                 {"slot_hours", sc.grid.slot_hours}};
    j["month"] = sc.month;
    j["seed"] = sc.seed;
    j["capacity_kw"] = sc.capacity_kw;
    j["charger_kw"] = sc.charger.power_kw;
    j["profile"] = {{"transformer_id", sc.profile.transformer_id},
                    {"date", sc.profile.date},
                    {"kw", std::vector<double>(sc.profile.kw.data(),
                                               sc.profile.kw.data() +
                                                   sc.profile.kw.size())}};
    j["params"] = {{"tau_min", sc.params.tau_min},
                   {"max_switches", sc.params.max_switches},
                   {"alpha", sc.params.alpha},
                   {"beta", sc.params.beta},
                   {"mip_gap", sc.params.mip_gap},
                   {"time_limit_secs", sc.params.time_limit_seconds}};
    j["tariff"] = tariff_to_json(sc.tariff);
    j["sessions"] = nlohmann::json::array();
    for (const EvSession& s : sc.sessions) {
        j["sessions"].push_back({{"ev_index", s.ev_index},
                                 {"initial_soc", s.initial_soc},
                                 {"final_soc", s.final_soc},
                                 {"battery_kwh", s.battery_kwh},
                                 {"unavailable_slots", s.unavailable_slots},
                                 {"energy_demand_kwh", s.energy_demand_kwh}});
    }
    std::ofstream out(path);
    require(out.good(), "cannot write scenario file: " + path);
    out << j.dump(2) << "\n";
}

Scenario load_scenario_json(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), "cannot open scenario file: " + path);
    nlohmann::json j;
    in >> j;

    Scenario sc;
    sc.grid.num_slots = j.at("grid").at("num_slots").get<int>();
    sc.grid.slot_hours = j.at("grid").at("slot_hours").get<double>();
    sc.month = j.at("month").get<int>();
    sc.seed = j.value("seed", std::uint64_t{0});
    sc.capacity_kw = j.at("capacity_kw").get<double>();
    sc.charger.power_kw = j.at("charger_kw").get<double>();
    const auto& jp = j.at("profile");
    sc.profile.transformer_id = jp.at("transformer_id").get<std::string>();
    sc.profile.date = jp.at("date").get<std::string>();
    auto kw = jp.at("kw").get<std::vector<double>>();
    sc.profile.kw = Eigen::Map<Eigen::ArrayXd>(kw.data(),
                                               static_cast<Eigen::Index>(kw.size()));
    const auto& jpar = j.at("params");
    sc.params.tau_min = jpar.value("tau_min", 4);
    sc.params.max_switches = jpar.value("max_switches", 4);
    sc.params.alpha = jpar.value("alpha", 2.0);
    sc.params.beta = jpar.value("beta", 1.0);
    sc.params.mip_gap = jpar.value("mip_gap", 1e-6);
    sc.params.time_limit_seconds = jpar.value("time_limit_secs", 10.0);
    sc.tariff = tariff_from_json(j.at("tariff"));
    for (const auto& js : j.at("sessions")) {
        EvSession s = EvSession::make(
            js.at("ev_index").get<int>(), js.at("initial_soc").get<double>(),
            js.at("final_soc").get<double>(), js.at("battery_kwh").get<double>(),
            js.at("unavailable_slots").get<std::vector<int>>());
        sc.sessions.push_back(std::move(s));
    }
    sc.validate();
    return sc;
}

void write_schedule_csv(const ChargingSchedule& schedule,
                        const std::string& path) {
    std::ofstream out(path);
    require(out.good(), "cannot write schedule file: " + path);
    out << "ev_index,slot,kappa\n";
    for (Eigen::Index ev = 0; ev < schedule.kappa.rows(); ++ev) {
        for (Eigen::Index t = 0; t < schedule.kappa.cols(); ++t) {
            out << ev << "," << t << "," << schedule.kappa(ev, t) << "\n";
        }
    }
}

void write_result_json(const CoordinationResult& result,
                       const std::string& path) {
    nlohmann::json j;
    j["status"] = to_string(result.status);
    if (result.schedule.has_value()) {
        j["cost_cents"] = result.schedule->total_cost_cents;
    } else {
        j["cost_cents"] = nullptr;
    }
    j["proof_note"] = result.proof_note;
    j["stats"] = {{"nodes_explored", result.stats.nodes_explored},
                  {"wall_time_seconds", result.stats.wall_time_seconds}};
    std::ofstream out(path);
    require(out.good(), "cannot write result file: " + path);
    out << j.dump(2) << "\n";
}

}  // namespace hostcap
