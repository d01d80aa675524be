#include "hostcap/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "hostcap/common.hpp"
#include "hostcap/cost_model.hpp"
#include "bitmask.hpp"

namespace hostcap {

namespace {

using detail::SlotMask;
using detail::lex_less;

constexpr std::int64_t kInf = std::int64_t{1} << 62;

struct Candidate {
    SlotMask mask;
    std::int64_t cost = 0;
};

// Enumerates the inclusion-minimal valid schedules for one EV: maximal runs
// of >= tau_min slots, at most max_runs of them, inside the allowed set,
// with either exactly `req` charged slots or -- when tau_min does not
// divide req -- ceil(req/tau_min) runs of exactly tau_min slots. Any other
// valid schedule contains one of these as a strict subset and costs
// strictly more, so optima (and their lex tie-breaks) are preserved.
class CandidateEnumerator {
public:
    CandidateEnumerator(int t_max, int tau_min, int max_runs, int req,
                        SlotMask allowed, const std::int64_t* cost)
        : t_max_(t_max),
          tau_(tau_min),
          max_runs_(max_runs),
          req_(req),
          allowed_(allowed),
          cost_(cost) {
        if (req_ == 0) {
            limit_ = 0;
            full_runs_total_ = 0;
        } else {
            int k_min = (req_ + tau_ - 1) / tau_;
            full_runs_total_ = req_ % tau_ != 0 ? k_min * tau_ : 0;
            limit_ = std::max(req_, full_runs_total_);
        }
    }

    std::vector<Candidate> run() {
        out_.clear();
        if (req_ == 0) {
            out_.push_back({SlotMask{}, 0});
            return std::move(out_);
        }
        place(0, 0, 0, true, SlotMask{}, 0);
        return std::move(out_);
    }

private:
    void place(int start_min, int runs_used, int total, bool all_exact_tau,
               SlotMask mask, std::int64_t cost_acc) {
        if (runs_used >= max_runs_) return;
        for (int start = start_min; start + tau_ <= t_max_; ++start) {
            if (!allowed_.test(start)) continue;
            SlotMask run_mask = mask;
            std::int64_t run_cost = cost_acc;
            int len = 0;
            for (int t = start; t < t_max_ && allowed_.test(t); ++t) {
                run_mask.set(t);
                run_cost += cost_[t];
                ++len;
                int ntotal = total + len;
                if (ntotal > limit_) break;
                if (len < tau_) continue;
                bool exact = all_exact_tau && len == tau_;
                if (ntotal == req_ ||
                    (exact && ntotal == full_runs_total_ && ntotal > req_)) {
                    out_.push_back({run_mask, run_cost});
                }
                if (ntotal < limit_) {
                    place(start + len + 1, runs_used + 1, ntotal, exact,
                          run_mask, run_cost);
                }
            }
        }
    }

    int t_max_;
    int tau_;
    int max_runs_;
    int req_;
    SlotMask allowed_;
    const std::int64_t* cost_;
    int limit_ = 0;
    int full_runs_total_ = 0;
    std::vector<Candidate> out_;
};

bool cost_lex_order(const Candidate& a, const Candidate& b) {
    if (a.cost != b.cost) return a.cost < b.cost;
    return lex_less(a.mask, b.mask);
}

CoordinationResult finish(const Scenario& scenario,
                          const std::vector<SlotMask>& picks,
                          std::uint64_t examined) {
    const int t_max = scenario.grid.num_slots;
    Eigen::ArrayXXi kappa(scenario.num_evs(), t_max);
    for (int ev = 0; ev < scenario.num_evs(); ++ev) {
        for (int t = 0; t < t_max; ++t) {
            kappa(ev, t) = picks[static_cast<std::size_t>(ev)].test(t) ? 1 : 0;
        }
    }
    CoordinationResult result;
    result.status = SolveStatus::Feasible;
    result.proof_note = "exhaustive enumeration over run placements";
    result.stats.nodes_explored = examined;
    result.schedule = ChargingSchedule::from_kappa(scenario, std::move(kappa));
    return result;
}

}  // namespace

bool oracle_can_handle(const Scenario& scenario) {
    const int n = scenario.num_evs();
    const int t = scenario.grid.num_slots;
    if (n <= 2 && t <= 24) return true;
    if (n == 1 && t <= 96 && scenario.params.max_switches <= 2) return true;
    return false;
}

CoordinationResult brute_force_oracle(const Scenario& scenario) {
    scenario.validate();
    require(oracle_can_handle(scenario),
            "brute_force_oracle: instance exceeds the exhaustive size bounds");

    CoordinationResult result;
    int overload_slot = -1;
    std::vector<int> caps = slot_ev_caps(scenario, &overload_slot);
    if (overload_slot >= 0) {
        result.status = SolveStatus::Infeasible;
        result.proof_note = "base load exceeds capacity at slot " +
                            std::to_string(overload_slot);
        return result;
    }

    const int t_max = scenario.grid.num_slots;
    const int n_evs = scenario.num_evs();
    SlotCostModel costs = SlotCostModel::build(scenario);

    SlotMask single_cap;  // slots where only one EV fits
    for (int t = 0; t < t_max; ++t) {
        if (caps[static_cast<std::size_t>(t)] == 1) single_cap.set(t);
    }

    std::vector<std::vector<Candidate>> lists;
    for (int ev = 0; ev < n_evs; ++ev) {
        const EvSession& s = scenario.sessions[static_cast<std::size_t>(ev)];
        SlotMask allowed = SlotMask::first_n(t_max);
        for (int t : s.unavailable_slots) allowed.reset(t);
        for (int t = 0; t < t_max; ++t) {
            if (caps[static_cast<std::size_t>(t)] == 0) allowed.reset(t);
        }
        CandidateEnumerator en(t_max, scenario.params.tau_min,
                               scenario.params.max_switches,
                               required_charge_slots(scenario, s), allowed,
                               costs.quantized.data());
        lists.push_back(en.run());
        if (lists.back().empty()) {
            result.status = SolveStatus::Infeasible;
            result.proof_note = "EV " + std::to_string(ev) +
                                " has no valid run placement";
            return result;
        }
        std::sort(lists.back().begin(), lists.back().end(), cost_lex_order);
    }

    std::uint64_t examined = 0;
    if (n_evs == 1) {
        examined = lists[0].size();
        return finish(scenario, {lists[0].front().mask}, examined);
    }

    // Two EVs: scan the cost-sorted lists for the optimal total, then take
    // the lexicographically smallest pair achieving it.
    const auto& first = lists[0];
    const auto& second = lists[1];
    std::int64_t best = kInf;
    auto compatible = [&](const Candidate& a, const Candidate& b) {
        return !(a.mask & b.mask & single_cap).any();
    };
    for (const Candidate& a : first) {
        if (a.cost + second.front().cost >= best) break;
        for (const Candidate& b : second) {
            if (a.cost + b.cost >= best) break;
            ++examined;
            if (compatible(a, b)) {
                best = a.cost + b.cost;
                break;
            }
        }
    }
    if (best >= kInf) {
        result.status = SolveStatus::Infeasible;
        result.proof_note =
            "exhaustive enumeration: no compatible pair of schedules";
        result.stats.nodes_explored = examined;
        return result;
    }

    std::map<std::int64_t, std::vector<const Candidate*>> second_by_cost;
    for (const Candidate& b : second) second_by_cost[b.cost].push_back(&b);

    std::vector<const Candidate*> first_lex;
    first_lex.reserve(first.size());
    for (const Candidate& a : first) first_lex.push_back(&a);
    std::sort(first_lex.begin(), first_lex.end(),
              [](const Candidate* a, const Candidate* b) {
                  return lex_less(a->mask, b->mask);
              });

    for (const Candidate* a : first_lex) {
        auto it = second_by_cost.find(best - a->cost);
        if (it == second_by_cost.end()) continue;
        for (const Candidate* b : it->second) {
            ++examined;
            if (compatible(*a, *b)) {
                return finish(scenario, {a->mask, b->mask}, examined);
            }
        }
    }
    throw std::logic_error(
        "brute_force_oracle: optimal pair vanished between passes");
}

}  // namespace hostcap
