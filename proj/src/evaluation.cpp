#include "hostcap/evaluation.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>
#include <tuple>

#include "hostcap/common.hpp"

namespace hostcap {

const char* to_string(EvalStatus status) {
    switch (status) {
        case EvalStatus::Infeasible: return "Infeasible";
        case EvalStatus::LessThanDesired: return "LessThanDesired";
        case EvalStatus::Desired: return "Desired";
        case EvalStatus::Unresolved: return "Unresolved";
    }
    return "Unknown";
}

EvalStatus eval_status_from_string(const std::string& s) {
    if (s == "Infeasible") return EvalStatus::Infeasible;
    if (s == "LessThanDesired") return EvalStatus::LessThanDesired;
    if (s == "Desired") return EvalStatus::Desired;
    if (s == "Unresolved") return EvalStatus::Unresolved;
    throw std::invalid_argument("unknown evaluation status: " + s);
}

EvaluationRecord max_supported_evs(const Transformer& transformer,
                                   const std::string& date,
                                   const ChargerSpec& charger,
                                   const CampaignContext& ctx,
                                   std::uint64_t seed) {
    const int desired = desired_ev_count(transformer.customer_count);
    EvaluationRecord rec;
    rec.transformer_id = transformer.id;
    rec.date = date;
    rec.charger_power_kw = charger.power_kw;
    rec.desired_ev = desired;
    rec.scenario_seed = seed;

    Scenario full = make_scenario(transformer, date, charger, desired, ctx.pmf,
                                  ctx.socs, ctx.ev, ctx.params, ctx.tariff,
                                  seed);
    // Decrement with the first n of the once-sampled sessions, so the loop
    // measures capacity rather than sampling luck.
    for (int n = desired; n >= 1; --n) {
        Scenario sc = full;
        sc.sessions.resize(static_cast<std::size_t>(n));
        CoordinationResult res = solve(sc);
        if (res.status == SolveStatus::Feasible) {
            rec.supported_ev = n;
            rec.status =
                n == desired ? EvalStatus::Desired : EvalStatus::LessThanDesired;
            rec.cost_cents = res.schedule->total_cost_cents;
            return rec;
        }
        if (res.status == SolveStatus::Unresolved) {
            rec.supported_ev = 0;
            rec.status = EvalStatus::Unresolved;
            return rec;
        }
    }
    rec.supported_ev = 0;
    rec.status = EvalStatus::Infeasible;
    return rec;
}

std::vector<EvaluationRecord> run_campaign(std::span<const Transformer> feeder,
                                           const CampaignContext& ctx,
                                           const CampaignPlan& plan) {
    require(plan.n_scenarios >= 0, "run_campaign: n_scenarios must be >= 0");
    for (double p : plan.powers_kw) {
        require(p > 0.0, "run_campaign: charging powers must be positive");
    }
    for (int m : plan.months) {
        require(m >= 1 && m <= 12, "run_campaign: month out of range");
    }

    // Canonical cell order: transformer id, month, power, scenario index.
    std::vector<const Transformer*> transformers;
    for (const Transformer& t : feeder) transformers.push_back(&t);
    std::sort(transformers.begin(), transformers.end(),
              [](const Transformer* a, const Transformer* b) {
                  return a->id < b->id;
              });
    std::vector<int> months = plan.months;
    std::sort(months.begin(), months.end());
    months.erase(std::unique(months.begin(), months.end()), months.end());
    std::vector<double> powers = plan.powers_kw;
    std::sort(powers.begin(), powers.end());
    powers.erase(std::unique(powers.begin(), powers.end()), powers.end());

    struct Task {
        const Transformer* transformer;
        std::string date;
        double power;
        std::uint64_t seed;
    };
    std::vector<Task> tasks;
    for (const Transformer* tr : transformers) {
        for (int month : months) {
            std::vector<std::string> dates = tr->dates_in_month(month);
            require(!dates.empty(), "run_campaign: transformer " + tr->id +
                                        " has no profile in month " +
                                        std::to_string(month));
            for (double power : powers) {
                for (int i = 0; i < plan.n_scenarios; ++i) {
                    std::uint64_t seed = seed_combine(
                        seed_combine(
                            seed_combine(
                                seed_combine(plan.master_seed, tr->id),
                                static_cast<std::uint64_t>(month)),
                            static_cast<std::uint64_t>(
                                std::llround(power * 1000.0))),
                        static_cast<std::uint64_t>(i));
                    tasks.push_back({tr,
                                     dates[static_cast<std::size_t>(i) %
                                           dates.size()],
                                     power, seed});
                }
            }
        }
    }

    std::vector<EvaluationRecord> records(tasks.size());
    int workers = plan.threads > 0
                      ? plan.threads
                      : static_cast<int>(std::thread::hardware_concurrency());
    if (workers < 1) workers = 1;
    workers = std::min<int>(workers, static_cast<int>(tasks.size()));

    if (workers <= 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i) {
            const Task& task = tasks[i];
            records[i] = max_supported_evs(*task.transformer, task.date,
                                           ChargerSpec{task.power}, ctx,
                                           task.seed);
        }
        return records;
    }

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            const Task& task = tasks[i];
            records[i] = max_supported_evs(*task.transformer, task.date,
                                           ChargerSpec{task.power}, ctx,
                                           task.seed);
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    return records;
}

std::vector<AggregateStats> aggregate(
    std::span<const EvaluationRecord> records,
    const std::map<std::string, int>& customer_counts) {
    require(!records.empty(), "aggregate: no records");

    struct Counts {
        int desired_ev = 0;
        int infeasible = 0;
        int less = 0;
        int desired = 0;
        int unresolved = 0;
        int total = 0;
    };
    std::map<std::tuple<std::string, int, double>, Counts> groups;
    for (const EvaluationRecord& r : records) {
        auto key = std::make_tuple(r.transformer_id, month_of_date(r.date),
                                   r.charger_power_kw);
        Counts& c = groups[key];
        c.desired_ev = r.desired_ev;
        ++c.total;
        switch (r.status) {
            case EvalStatus::Infeasible: ++c.infeasible; break;
            case EvalStatus::LessThanDesired: ++c.less; break;
            case EvalStatus::Desired: ++c.desired; break;
            case EvalStatus::Unresolved: ++c.unresolved; break;
        }
    }

    std::vector<AggregateStats> out;
    for (const auto& [key, c] : groups) {
        AggregateStats a;
        a.transformer_id = std::get<0>(key);
        a.month = std::get<1>(key);
        a.charger_power_kw = std::get<2>(key);
        auto it = customer_counts.find(a.transformer_id);
        require(it != customer_counts.end(),
                "aggregate: no customer count for transformer " +
                    a.transformer_id);
        a.customer_count = it->second;
        a.desired_ev = c.desired_ev;
        a.n_scenarios = c.total;
        double scale = 100.0 / c.total;
        a.pct_infeasible = scale * c.infeasible;
        a.pct_less = scale * c.less;
        a.pct_desired = scale * c.desired;
        a.pct_unresolved = scale * c.unresolved;
        a.confidence_rate = a.pct_desired;
        out.push_back(std::move(a));
    }
    return out;
}

}  // namespace hostcap
