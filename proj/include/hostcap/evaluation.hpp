#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hostcap/scenario.hpp"
#include "hostcap/solver.hpp"

namespace hostcap {

enum class EvalStatus { Infeasible, LessThanDesired, Desired, Unresolved };

const char* to_string(EvalStatus status);
EvalStatus eval_status_from_string(const std::string& s);

// Outcome of one hosting-capacity scenario on one transformer-day.
struct EvaluationRecord {
    std::string transformer_id;
    std::string date;
    double charger_power_kw = 0.0;
    int desired_ev = 0;
    int supported_ev = 0;
    EvalStatus status = EvalStatus::Infeasible;
    std::uint64_t scenario_seed = 0;
    std::optional<double> cost_cents;  // of the supporting schedule
};

// Everything a campaign shares across scenarios.
struct CampaignContext {
    JointCommutePmf pmf;
    SocDistributions socs;
    EvSpec ev;
    CoordinationParams params;
    TouTariff tariff;
};

// Samples desired_ev sessions once for the given seed, then tries
// n = desired, desired-1, ..., 1 with the first n sessions until a
// coordination is feasible. A timed-out decisive solve yields Unresolved
// rather than a guessed count.
EvaluationRecord max_supported_evs(const Transformer& transformer,
                                   const std::string& date,
                                   const ChargerSpec& charger,
                                   const CampaignContext& ctx,
                                   std::uint64_t seed);

struct CampaignPlan {
    std::vector<int> months;
    std::vector<double> powers_kw;
    int n_scenarios = 0;
    std::uint64_t master_seed = 0;
    int threads = 0;  // <= 0: hardware concurrency
};

// Runs max_supported_evs over every (transformer, month, power, index)
// cell. Scenario seeds derive from the master seed and the cell tuple; the
// record order is the sorted tuple order, so output is byte-identical for
// any worker count. Profile dates cycle deterministically through the
// month's available days.
std::vector<EvaluationRecord> run_campaign(std::span<const Transformer> feeder,
                                           const CampaignContext& ctx,
                                           const CampaignPlan& plan);

// Table-row summary for one (transformer, month, power) group.
struct AggregateStats {
    std::string transformer_id;
    int month = 0;
    int customer_count = 0;
    int desired_ev = 0;
    double charger_power_kw = 0.0;
    int n_scenarios = 0;
    double pct_infeasible = 0.0;
    double pct_less = 0.0;
    double pct_desired = 0.0;
    double pct_unresolved = 0.0;
    double confidence_rate = 0.0;  // == pct_desired
};

std::vector<AggregateStats> aggregate(
    std::span<const EvaluationRecord> records,
    const std::map<std::string, int>& customer_counts);

}  // namespace hostcap
