#include "doctest.h"

#include "hostcap/oracle.hpp"
#include "hostcap/solver.hpp"
#include "hostcap/verify.hpp"
#include "testutil.hpp"

using namespace hostcap;
using namespace hostcap::testutil;

TEST_CASE("oracle size bounds") {
    Scenario tiny = random_tiny_scenario(1);
    CHECK(oracle_can_handle(tiny));

    Scenario big = random_full_scenario(2, 3);
    if (big.num_evs() >= 2) {
        CHECK(!oracle_can_handle(big));
        CHECK_THROWS_AS(brute_force_oracle(big), std::invalid_argument);
    }
}

TEST_CASE("oracle agrees with itself on zero demand") {
    std::vector<EvSession> sessions;
    sessions.push_back(EvSession::make(0, 0.5, 0.5, 100.0, {}));
    CoordinationParams params;
    params.tau_min = 2;
    params.max_switches = 2;
    Scenario sc = raw_scenario(TimeGrid::hourly(),
                               Eigen::ArrayXd::Zero(24), 50.0, 7.2,
                               std::move(sessions), params,
                               flat_tariff(10.0, 24), 7, 1);
    CoordinationResult res = brute_force_oracle(sc);
    REQUIRE(res.status == SolveStatus::Feasible);
    CHECK((res.schedule->kappa == 0).all());
    CHECK(res.schedule->total_cost_cents == 0.0);
}

TEST_CASE("capacity-infeasible tiny instance: both paths report Infeasible") {
    Eigen::ArrayXd load = Eigen::ArrayXd::Constant(24, 20.0);
    load[5] = 60.0;
    std::vector<EvSession> sessions;
    sessions.push_back(EvSession::make(0, 0.2, 0.4, 100.0, {}));
    CoordinationParams params;
    params.tau_min = 2;
    params.max_switches = 2;
    Scenario sc = raw_scenario(TimeGrid::hourly(), load, 50.0, 7.2,
                               std::move(sessions), params,
                               flat_tariff(10.0, 24), 7, 1);
    CHECK(brute_force_oracle(sc).status == SolveStatus::Infeasible);
    CHECK(solve(sc).status == SolveStatus::Infeasible);
}

TEST_CASE("solver matches the oracle on random tiny instances") {
    int feasible = 0;
    int infeasible = 0;
    for (std::uint64_t seed = 5000; seed < 5100; ++seed) {
        CAPTURE(seed);
        Scenario sc = random_tiny_scenario(seed);
        CoordinationResult fast = solve(sc);
        CoordinationResult slow = brute_force_oracle(sc);
        REQUIRE(fast.status == slow.status);
        if (fast.status == SolveStatus::Feasible) {
            ++feasible;
            double a = fast.schedule->total_cost_cents;
            double b = slow.schedule->total_cost_cents;
            CHECK(std::abs(a - b) <= 1e-6 * std::max(1.0, std::abs(b)));
            // Same integer objective and same tie-break: identical kappa.
            CHECK((fast.schedule->kappa == slow.schedule->kappa).all());
            CHECK(verify_schedule(sc, *fast.schedule).empty());
            CHECK(verify_schedule(sc, *slow.schedule).empty());
        } else {
            ++infeasible;
        }
    }
    // The generator must exercise both outcomes.
    CHECK(feasible > 20);
    CHECK(infeasible > 5);
}

TEST_CASE("solver matches the oracle on single-EV 96-slot instances") {
    for (std::uint64_t seed = 7000; seed < 7012; ++seed) {
        SplitMix64 rng(seed);
        Eigen::ArrayXd load(96);
        double cap = 50.0;
        for (int t = 0; t < 96; ++t) load[t] = cap * rng.uniform(0.1, 0.85);
        int depart = 24 + static_cast<int>(rng.below(16));
        int ret = 60 + static_cast<int>(rng.below(20));
        std::vector<int> away;
        for (int t = depart; t < ret; ++t) away.push_back(t);
        double demand = 1.8 * (4 + static_cast<double>(rng.below(20)));
        std::vector<EvSession> sessions;
        sessions.push_back(
            EvSession::make(0, 0.2, 0.2 + demand / 100.0, 100.0, away));
        CoordinationParams params;
        params.max_switches = 2;
        Scenario sc = raw_scenario(TimeGrid::standard(), load, cap, 7.2,
                                   std::move(sessions), params,
                                   srp_default_tariff(), 7, seed);
        CAPTURE(seed);
        CoordinationResult fast = solve(sc);
        CoordinationResult slow = brute_force_oracle(sc);
        REQUIRE(fast.status == slow.status);
        if (fast.status == SolveStatus::Feasible) {
            CHECK((fast.schedule->kappa == slow.schedule->kappa).all());
        }
    }
}
