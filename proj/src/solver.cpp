#include "hostcap/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "hostcap/common.hpp"
#include "hostcap/cost_model.hpp"
#include "bitmask.hpp"

namespace hostcap {

namespace {

using detail::SlotMask;
using detail::SlotMaskHash;

constexpr std::int64_t kInf = std::int64_t{1} << 62;

// Node-unit allowance per second of time limit. The budget is counted in
// deterministic work units (bit decisions, DP cells) instead of wall time
// so a given scenario always resolves to the same result.
constexpr double kNodeUnitsPerSecond = 2.0e7;

// Per-EV completion table over states (slot, runs started, run phase,
// charged slots). Run phase j: 0 = idle, 1..tau_min-1 = inside a run that
// must continue, tau_min = inside a run free to stop. Charged slots are
// capped at the EV's requirement.
struct EvDp {
    int t_max = 0;
    int s_max = 0;
    int tau = 0;
    int req = 0;
    SlotMask allowed{};
    std::vector<std::int64_t> g;

    std::size_t cells() const { return g.size(); }

    std::int64_t at(int t, int k, int j, int c) const {
        return g[static_cast<std::size_t>(
            ((t * (s_max + 1) + k) * (tau + 1) + j) * (req + 1) + c)];
    }
    std::int64_t& at(int t, int k, int j, int c) {
        return g[static_cast<std::size_t>(
            ((t * (s_max + 1) + k) * (tau + 1) + j) * (req + 1) + c)];
    }

    std::int64_t min_total() const { return at(0, 0, 0, 0); }

    void build(int t_max_in, int s_max_in, int tau_in, int req_in,
               SlotMask allowed_in, const std::int64_t* cost) {
        t_max = t_max_in;
        s_max = s_max_in;
        tau = tau_in;
        req = req_in;
        allowed = allowed_in;
        g.assign(static_cast<std::size_t>(t_max + 1) *
                     static_cast<std::size_t>(s_max + 1) *
                     static_cast<std::size_t>(tau + 1) *
                     static_cast<std::size_t>(req + 1),
                 kInf);
        for (int k = 0; k <= s_max; ++k) {
            for (int j = 0; j <= tau; ++j) {
                if (j != 0 && j != tau) continue;  // dangling short run
                at(t_max, k, j, req) = 0;
            }
        }
        for (int t = t_max - 1; t >= 0; --t) {
            const bool can_charge = allowed.test(t);
            for (int k = 0; k <= s_max; ++k) {
                for (int j = 0; j <= tau; ++j) {
                    const int nk = j == 0 ? k + 1 : k;
                    const int nj = j == 0 ? 1 : std::min(j + 1, tau);
                    const bool can_idle = (j == 0 || j == tau);
                    const bool can_start = can_charge && (j != 0 || k < s_max);
                    for (int c = 0; c <= req; ++c) {
                        std::int64_t best = kInf;
                        if (can_idle) best = at(t + 1, k, 0, c);
                        if (can_start) {
                            std::int64_t nxt =
                                at(t + 1, nk, nj, std::min(c + 1, req));
                            if (nxt < kInf) {
                                std::int64_t cand = cost[t] + nxt;
                                if (cand < best) best = cand;
                            }
                        }
                        at(t, k, j, c) = best;
                    }
                }
            }
        }
    }
};

enum SymState { kSymOff = 0, kSymEqual = 1 };

class ExactSearch {
public:
    explicit ExactSearch(const Scenario& sc) : sc_(sc) {}

    CoordinationResult run();

private:
    const Scenario& sc_;
    int t_slots_ = 0;
    int n_evs_ = 0;
    int s_max_ = 0;
    int tau_ = 0;
    SlotCostModel costs_;

    struct EvInfo {
        SlotMask avail;
        int req = 0;
        int sym_prev = -1;  // previous EV with identical (avail, req)
    };
    std::vector<EvInfo> evs_;
    std::vector<int> suffix_req_;
    std::vector<std::vector<int>> avail_counts_;  // [e][t]: #{f >= e avail at t}

    std::vector<int> res_;
    SlotMask zero_{};
    std::vector<SlotMask> chosen_;
    std::vector<std::uint8_t> cur_;
    std::vector<std::uint8_t> inc_;
    bool has_inc_ = false;
    std::int64_t inc_cost_ = 0;
    int lex_div_ = -1;
    bool lex_less_ = false;

    std::vector<EvDp> dp_;
    std::vector<bool> dp_valid_;
    EvDp scratch_;
    std::vector<std::unordered_map<SlotMask, std::int64_t, SlotMaskHash>> minc_;

    std::uint64_t nodes_ = 0;
    std::uint64_t budget_ = 0;
    bool aborted_ = false;

    bool charge(std::uint64_t units) {
        nodes_ += units;
        if (nodes_ > budget_) aborted_ = true;
        return !aborted_;
    }

    EvDp& dp_for(int e, SlotMask allowed) {
        if (!dp_valid_[static_cast<std::size_t>(e)] ||
            !(dp_[static_cast<std::size_t>(e)].allowed == allowed)) {
            EvDp& d = dp_[static_cast<std::size_t>(e)];
            d.build(t_slots_, s_max_, tau_, evs_[static_cast<std::size_t>(e)].req,
                    allowed, costs_.quantized.data());
            dp_valid_[static_cast<std::size_t>(e)] = true;
            charge(d.cells() / 4 + 1);
        }
        return dp_[static_cast<std::size_t>(e)];
    }

    std::int64_t minc_of(int e, SlotMask allowed) {
        auto& cache = minc_[static_cast<std::size_t>(e)];
        auto it = cache.find(allowed);
        if (it != cache.end()) return it->second;
        scratch_.build(t_slots_, s_max_, tau_,
                       evs_[static_cast<std::size_t>(e)].req, allowed,
                       costs_.quantized.data());
        charge(scratch_.cells() / 4 + 1);
        std::int64_t v = scratch_.min_total();
        cache.emplace(allowed, v);
        return v;
    }

    void accept_leaf(std::int64_t total) {
        bool better = !has_inc_ || total < inc_cost_ ||
                      (total == inc_cost_ && lex_div_ != -1 && lex_less_);
        if (!better) return;
        inc_ = cur_;
        inc_cost_ = total;
        has_inc_ = true;
        // The whole DFS stack consists of ancestors of this leaf, so the
        // running prefix matches the new incumbent exactly.
        lex_div_ = -1;
        lex_less_ = false;
    }

    void dfs_ev(int e, std::int64_t acc);
    void dfs_bits(int e, int t, int k, int j, int c, std::int64_t cost_e,
                  std::int64_t acc, std::int64_t rest, int sym);
    void greedy_seed();
    void commit(const SlotMask& bits);
    void rollback(const SlotMask& bits);
};

void ExactSearch::commit(const SlotMask& bits) {
    SlotMask left = bits;
    for (int t = left.lowest(); t >= 0; left.reset(t), t = left.lowest()) {
        if (--res_[static_cast<std::size_t>(t)] == 0) zero_.set(t);
    }
}

void ExactSearch::rollback(const SlotMask& bits) {
    SlotMask left = bits;
    for (int t = left.lowest(); t >= 0; left.reset(t), t = left.lowest()) {
        if (res_[static_cast<std::size_t>(t)]++ == 0) zero_.reset(t);
    }
}

void ExactSearch::dfs_ev(int e, std::int64_t acc) {
    if (aborted_) return;
    if (e == n_evs_) {
        accept_leaf(acc);
        return;
    }
    // Counting relaxation: remaining EVs need suffix_req_[e] charged slots,
    // the grid offers at most min(residual, #available) per slot.
    long supply = 0;
    const long need = suffix_req_[static_cast<std::size_t>(e)];
    const auto& cnt = avail_counts_[static_cast<std::size_t>(e)];
    for (int t = 0; t < t_slots_; ++t) {
        supply += std::min(res_[static_cast<std::size_t>(t)],
                           cnt[static_cast<std::size_t>(t)]);
    }
    if (supply < need) return;

    SlotMask allowed = evs_[static_cast<std::size_t>(e)].avail & ~zero_;
    EvDp& dp = dp_for(e, allowed);
    if (aborted_) return;
    std::int64_t own = dp.min_total();
    if (own >= kInf) return;

    std::int64_t rest = 0;
    for (int f = e + 1; f < n_evs_; ++f) {
        std::int64_t m =
            minc_of(f, evs_[static_cast<std::size_t>(f)].avail & ~zero_);
        if (aborted_ || m >= kInf) return;
        rest += m;
    }
    if (has_inc_) {
        std::int64_t low = acc + own + rest;
        if (low > inc_cost_) return;
        if (low == inc_cost_ && lex_div_ != -1 && !lex_less_) return;
    }
    int sym = evs_[static_cast<std::size_t>(e)].sym_prev >= 0 ? kSymEqual
                                                              : kSymOff;
    dfs_bits(e, 0, 0, 0, 0, 0, acc, rest, sym);
}

void ExactSearch::dfs_bits(int e, int t, int k, int j, int c,
                           std::int64_t cost_e, std::int64_t acc,
                           std::int64_t rest, int sym) {
    if (!charge(1)) return;
    if (t == t_slots_) {
        commit(chosen_[static_cast<std::size_t>(e)]);
        dfs_ev(e + 1, acc + cost_e);
        rollback(chosen_[static_cast<std::size_t>(e)]);
        return;
    }
    const EvDp& dp = dp_[static_cast<std::size_t>(e)];
    const EvInfo& ev = evs_[static_cast<std::size_t>(e)];
    const int p = e * t_slots_ + t;

    for (int b = 0; b <= 1; ++b) {
        int nk;
        int nj;
        int nc;
        if (b == 0) {
            if (j != 0 && j != tau_) continue;  // mid-run, must stay on
            nk = k;
            nj = 0;
            nc = c;
        } else {
            if (!dp.allowed.test(t)) continue;
            if (j == 0) {
                if (k >= s_max_) continue;
                nk = k + 1;
                nj = 1;
            } else {
                nk = k;
                nj = std::min(j + 1, tau_);
            }
            nc = std::min(c + 1, ev.req);
        }
        std::int64_t completion = dp.at(t + 1, nk, nj, nc);
        if (completion >= kInf) continue;
        std::int64_t ce = cost_e + (b != 0 ? costs_.quantized[static_cast<std::size_t>(t)] : 0);

        int divstate = 0;  // -1 less, 0 equal, +1 greater
        if (lex_div_ != -1) {
            divstate = lex_less_ ? -1 : 1;
        } else if (has_inc_) {
            int ib = inc_[static_cast<std::size_t>(p)];
            divstate = b == ib ? 0 : (b < ib ? -1 : 1);
        }
        if (has_inc_) {
            std::int64_t lb = acc + ce + completion + rest;
            if (lb > inc_cost_) continue;
            if (lb == inc_cost_ && divstate > 0) continue;
        }

        int nsym = sym;
        if (sym == kSymEqual) {
            int qb = chosen_[static_cast<std::size_t>(ev.sym_prev)].test(t) ? 1 : 0;
            // Identical EVs are interchangeable; keep their schedules in
            // nondecreasing lex order.
            if (b < qb) continue;
            nsym = b > qb ? kSymOff : kSymEqual;
        }

        cur_[static_cast<std::size_t>(p)] = static_cast<std::uint8_t>(b);
        if (b != 0) chosen_[static_cast<std::size_t>(e)].set(t);
        bool set_div = false;
        if (has_inc_ && lex_div_ == -1 && divstate != 0) {
            lex_div_ = p;
            lex_less_ = divstate < 0;
            set_div = true;
        }

        dfs_bits(e, t + 1, nk, nj, nc, ce, acc, rest, nsym);

        if (b != 0) chosen_[static_cast<std::size_t>(e)].reset(t);
        if (set_div && lex_div_ == p) {
            lex_div_ = -1;
            lex_less_ = false;
        }
        if (aborted_) return;
    }
}

void ExactSearch::greedy_seed() {
    // Sequentially give each EV its cheapest (then lex-smallest) schedule
    // under the residual capacity. Not necessarily optimal; used only as
    // the initial incumbent.
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(n_evs_ * t_slots_), 0);
    std::vector<SlotMask> taken(static_cast<std::size_t>(n_evs_));
    std::int64_t total = 0;
    int done = 0;
    bool ok = true;
    for (int e = 0; e < n_evs_ && ok; ++e) {
        SlotMask allowed = evs_[static_cast<std::size_t>(e)].avail & ~zero_;
        EvDp& dp = dp_for(e, allowed);
        if (aborted_ || dp.min_total() >= kInf) {
            ok = false;
            break;
        }
        int k = 0;
        int j = 0;
        int c = 0;
        for (int t = 0; t < t_slots_; ++t) {
            std::int64_t v = dp.at(t, k, j, c);
            bool take_zero = false;
            if (j == 0 || j == tau_) {
                take_zero = dp.at(t + 1, k, 0, c) == v;
            }
            if (take_zero) {
                j = 0;
                continue;
            }
            // Must charge here on the optimal path.
            bits[static_cast<std::size_t>(e * t_slots_ + t)] = 1;
            taken[static_cast<std::size_t>(e)].set(t);
            total += costs_.quantized[static_cast<std::size_t>(t)];
            if (j == 0) {
                ++k;
                j = 1;
            } else {
                j = std::min(j + 1, tau_);
            }
            c = std::min(c + 1, evs_[static_cast<std::size_t>(e)].req);
        }
        commit(taken[static_cast<std::size_t>(e)]);
        ++done;
    }
    for (int e = done - 1; e >= 0; --e) {
        rollback(taken[static_cast<std::size_t>(e)]);
    }
    if (ok && !aborted_) {
        inc_ = std::move(bits);
        inc_cost_ = total;
        has_inc_ = true;
    }
}

CoordinationResult ExactSearch::run() {
    auto start = std::chrono::steady_clock::now();
    CoordinationResult result;

    t_slots_ = sc_.grid.num_slots;
    n_evs_ = sc_.num_evs();
    s_max_ = sc_.params.max_switches;
    tau_ = sc_.params.tau_min;
    require(t_slots_ <= 128, "solve: grids beyond 128 slots are not supported");

    int overload_slot = -1;
    std::vector<int> caps = slot_ev_caps(sc_, &overload_slot);
    if (overload_slot >= 0) {
        result.status = SolveStatus::Infeasible;
        result.proof_note = "base load exceeds capacity at slot " +
                            std::to_string(overload_slot) +
                            " with zero charging";
        result.stats.wall_time_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                          start)
                .count();
        return result;
    }

    costs_ = SlotCostModel::build(sc_);
    budget_ = static_cast<std::uint64_t>(
        std::llround(sc_.params.time_limit_seconds * kNodeUnitsPerSecond));

    evs_.resize(static_cast<std::size_t>(n_evs_));
    for (int e = 0; e < n_evs_; ++e) {
        const EvSession& s = sc_.sessions[static_cast<std::size_t>(e)];
        EvInfo info;
        info.avail = SlotMask::first_n(t_slots_);
        for (int t : s.unavailable_slots) info.avail.reset(t);
        for (int t = 0; t < t_slots_; ++t) {
            if (caps[static_cast<std::size_t>(t)] == 0) info.avail.reset(t);
        }
        info.req = required_charge_slots(sc_, s);
        info.sym_prev = -1;
        for (int f = e - 1; f >= 0; --f) {
            if (evs_[static_cast<std::size_t>(f)].req == info.req &&
                evs_[static_cast<std::size_t>(f)].avail == info.avail) {
                info.sym_prev = f;
                break;
            }
        }
        evs_[static_cast<std::size_t>(e)] = info;
    }

    suffix_req_.assign(static_cast<std::size_t>(n_evs_ + 1), 0);
    for (int e = n_evs_ - 1; e >= 0; --e) {
        suffix_req_[static_cast<std::size_t>(e)] =
            suffix_req_[static_cast<std::size_t>(e + 1)] +
            evs_[static_cast<std::size_t>(e)].req;
    }
    avail_counts_.assign(static_cast<std::size_t>(n_evs_ + 1),
                         std::vector<int>(static_cast<std::size_t>(t_slots_), 0));
    for (int e = n_evs_ - 1; e >= 0; --e) {
        for (int t = 0; t < t_slots_; ++t) {
            avail_counts_[static_cast<std::size_t>(e)][static_cast<std::size_t>(t)] =
                avail_counts_[static_cast<std::size_t>(e + 1)]
                             [static_cast<std::size_t>(t)] +
                (evs_[static_cast<std::size_t>(e)].avail.test(t) ? 1 : 0);
        }
    }

    res_ = caps;
    zero_ = SlotMask{};
    for (int t = 0; t < t_slots_; ++t) {
        if (res_[static_cast<std::size_t>(t)] <= 0) zero_.set(t);
    }
    chosen_.assign(static_cast<std::size_t>(n_evs_), SlotMask{});
    cur_.assign(static_cast<std::size_t>(n_evs_ * t_slots_), 0);
    dp_.resize(static_cast<std::size_t>(n_evs_));
    dp_valid_.assign(static_cast<std::size_t>(n_evs_), false);
    minc_.resize(static_cast<std::size_t>(n_evs_));

    greedy_seed();
    if (!aborted_) dfs_ev(0, 0);

    result.stats.nodes_explored = nodes_;
    result.stats.wall_time_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();

    if (aborted_) {
        result.status = SolveStatus::Unresolved;
        result.proof_note =
            "search budget exhausted before optimality or infeasibility "
            "could be proven";
        return result;
    }
    if (!has_inc_) {
        result.status = SolveStatus::Infeasible;
        result.proof_note = "exhaustive search: no feasible assignment exists";
        return result;
    }
    result.status = SolveStatus::Feasible;
    result.proof_note = "optimal; search space exhausted";
    Eigen::ArrayXXi kappa(n_evs_, t_slots_);
    for (int e = 0; e < n_evs_; ++e) {
        for (int t = 0; t < t_slots_; ++t) {
            kappa(e, t) = inc_[static_cast<std::size_t>(e * t_slots_ + t)];
        }
    }
    result.schedule = ChargingSchedule::from_kappa(sc_, std::move(kappa));
    return result;
}

}  // namespace

CoordinationResult solve(const Scenario& scenario) {
    scenario.validate();
    ExactSearch search(scenario);
    return search.run();
}

}  // namespace hostcap
