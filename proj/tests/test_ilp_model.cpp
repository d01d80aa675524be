#include "doctest.h"

#include "hostcap/ilp_model.hpp"
#include "hostcap/schedule.hpp"
#include "testutil.hpp"

using namespace hostcap;
using namespace hostcap::testutil;

namespace {

Scenario one_ev_scenario(std::vector<int> away = {}) {
    TimeGrid grid = TimeGrid::standard();
    Eigen::ArrayXd load = Eigen::ArrayXd::Constant(96, 10.0);
    std::vector<EvSession> sessions;
    sessions.push_back(EvSession::make(0, 0.2, 0.6, 100.0, std::move(away)));
    return raw_scenario(grid, load, 50.0, 7.2, std::move(sessions),
                        CoordinationParams{}, srp_default_tariff(), 7, 1);
}

int count_rows(const IlpModel& m, RowKind kind) {
    int n = 0;
    for (const auto& row : m.rows) n += row.kind == kind ? 1 : 0;
    return n;
}

// Applies the model rows to a given kappa with omega recomputed by the
// transition rule.
std::vector<std::string> check_kappa(const Scenario& sc,
                                     const Eigen::ArrayXXi& kappa) {
    IlpModel m = build_ilp(sc);
    SwitchIndicators ind = SwitchIndicators::from_kappa(kappa);
    return check_against_model(m, kappa, ind.omega);
}

}  // namespace

TEST_CASE("variable and row counts for one unconstrained EV") {
    Scenario sc = one_ev_scenario();
    IlpModel m = build_ilp(sc);
    CHECK(m.num_vars() == 192);  // 96 kappa + 96 omega
    CHECK(count_rows(m, RowKind::Capacity) == 96);
    CHECK(count_rows(m, RowKind::Demand) == 1);
    CHECK(count_rows(m, RowKind::SwitchBudget) == 1);
    CHECK(count_rows(m, RowKind::SwitchInit) == 1);
    CHECK(count_rows(m, RowKind::SwitchLower) == 95);
    CHECK(count_rows(m, RowKind::SwitchUpper) == 95);
    CHECK(m.fixed_zero_vars.empty());
}

TEST_CASE("availability window fixes exactly its kappa variables") {
    std::vector<int> away;
    for (int t = 32; t < 64; ++t) away.push_back(t);
    Scenario sc = one_ev_scenario(away);
    IlpModel m = build_ilp(sc);
    REQUIRE(m.fixed_zero_vars.size() == 32);
    for (std::size_t i = 0; i < 32; ++i) {
        CHECK(m.fixed_zero_vars[i] == m.kappa_var(0, 32 + static_cast<int>(i)));
    }
}

TEST_CASE("objective carries the per-slot energy cost") {
    Scenario sc = one_ev_scenario();
    IlpModel m = build_ilp(sc);
    for (int t = 0; t < 96; ++t) {
        double expected = 7.2 * 0.25 * price_at(sc.tariff, 7, t);
        CHECK(m.objective[m.kappa_var(0, t)] == doctest::Approx(expected));
        CHECK(m.objective[m.omega_var(0, t)] == 0.0);
    }
}

TEST_CASE("turn-on linking rows force omega exactly on 0->1 transitions") {
    // alpha = 2, beta = 1: evaluate the four binary transitions directly
    // against the row algebra.
    const double alpha = 2.0;
    const double beta = 1.0;
    for (int prev = 0; prev <= 1; ++prev) {
        for (int cur = 0; cur <= 1; ++cur) {
            int forced = (prev == 0 && cur == 1) ? 1 : 0;
            for (int omega = 0; omega <= 1; ++omega) {
                bool lower_ok = prev - alpha * (1 - omega) + beta <= cur;
                bool upper_ok = prev + alpha * omega >= cur;
                bool satisfiable = lower_ok && upper_ok;
                CHECK(satisfiable == (omega == forced));
            }
        }
    }
}

TEST_CASE("model rows accept solver-shaped schedules and reject bad ones") {
    Scenario sc = one_ev_scenario();
    Eigen::ArrayXXi kappa = Eigen::ArrayXXi::Zero(1, 96);

    SUBCASE("valid: one long run satisfying demand") {
        // Demand 40 kWh at 1.8 kWh per slot -> 23 slots.
        for (int t = 10; t < 33; ++t) kappa(0, t) = 1;
        CHECK(check_kappa(sc, kappa).empty());
    }
    SUBCASE("short run violates the min-duration rows") {
        for (int t = 10; t < 33; ++t) kappa(0, t) = 1;
        kappa(0, 50) = 1;
        kappa(0, 51) = 1;  // run of 2 < tau_min
        auto violations = check_kappa(sc, kappa);
        CHECK(!violations.empty());
    }
    SUBCASE("demand row flags undershoot") {
        for (int t = 10; t < 14; ++t) kappa(0, t) = 1;  // one hour only
        auto violations = check_kappa(sc, kappa);
        REQUIRE(!violations.empty());
        bool demand_hit = false;
        for (const auto& v : violations) {
            demand_hit = demand_hit || v.find("demand") != std::string::npos;
        }
        CHECK(demand_hit);
    }
    SUBCASE("capacity row flags an overloaded slot") {
        Eigen::ArrayXd load = Eigen::ArrayXd::Constant(96, 10.0);
        load[20] = 46.0;  // headroom 4 < 7.2
        std::vector<EvSession> sessions;
        sessions.push_back(EvSession::make(0, 0.2, 0.6, 100.0, {}));
        Scenario tight = raw_scenario(TimeGrid::standard(), load, 50.0, 7.2,
                                      std::move(sessions), CoordinationParams{},
                                      srp_default_tariff(), 7, 1);
        Eigen::ArrayXXi k2 = Eigen::ArrayXXi::Zero(1, 96);
        for (int t = 10; t < 33; ++t) k2(0, t) = 1;  // covers slot 20
        auto violations = check_kappa(tight, k2);
        bool cap_hit = false;
        for (const auto& v : violations) {
            cap_hit = cap_hit || v.find("capacity") != std::string::npos;
        }
        CHECK(cap_hit);
    }
    SUBCASE("wrong omega is rejected even when kappa is fine") {
        for (int t = 10; t < 33; ++t) kappa(0, t) = 1;
        IlpModel m = build_ilp(sc);
        SwitchIndicators ind = SwitchIndicators::from_kappa(kappa);
        ind.omega(0, 11) = 1;  // spurious turn-on marker mid-run
        CHECK(!check_against_model(m, kappa, ind.omega).empty());
    }
}

TEST_CASE("end-of-day boundary: a final full-length run is legal") {
    Scenario sc = one_ev_scenario();
    sc.sessions[0] = EvSession::make(0, 0.2, 0.2 + 4 * 1.8 / 100.0, 100.0, {});
    sc.validate();

    Eigen::ArrayXXi kappa = Eigen::ArrayXXi::Zero(1, 96);
    SUBCASE("run over slots 92..95 satisfies every row") {
        for (int t = 92; t < 96; ++t) kappa(0, t) = 1;
        CHECK(check_kappa(sc, kappa).empty());
    }
    SUBCASE("run starting at 93 is cut off by the day end and rejected") {
        for (int t = 93; t < 96; ++t) kappa(0, t) = 1;
        CHECK(!check_kappa(sc, kappa).empty());
    }
}

TEST_CASE("fixings mirror the availability set") {
    std::vector<int> away{5, 17, 80};
    Scenario sc = one_ev_scenario(away);
    Eigen::ArrayXXi kappa = Eigen::ArrayXXi::Zero(1, 96);
    for (int t = 40; t < 63; ++t) kappa(0, t) = 1;
    kappa(0, 80) = 1;  // away slot
    IlpModel m = build_ilp(sc);
    SwitchIndicators ind = SwitchIndicators::from_kappa(kappa);
    auto violations = check_against_model(m, kappa, ind.omega);
    bool fixing_hit = false;
    for (const auto& v : violations) {
        fixing_hit = fixing_hit || v.find("fixing") != std::string::npos;
    }
    CHECK(fixing_hit);
}
