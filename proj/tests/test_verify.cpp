#include "doctest.h"

#include "hostcap/verify.hpp"
#include "testutil.hpp"

using namespace hostcap;
using namespace hostcap::testutil;

namespace {

Scenario two_ev_scenario() {
    std::vector<EvSession> sessions;
    std::vector<int> away;
    for (int t = 32; t < 64; ++t) away.push_back(t);
    sessions.push_back(EvSession::make(0, 0.2, 0.4, 100.0, away));
    sessions.push_back(EvSession::make(1, 0.2, 0.4, 100.0, {}));
    return raw_scenario(TimeGrid::standard(),
                        Eigen::ArrayXd::Constant(96, 10.0), 50.0, 7.2,
                        std::move(sessions), CoordinationParams{},
                        srp_default_tariff(), 7, 3);
}

int count_kind(const std::vector<Violation>& vs, ViolationKind kind) {
    int n = 0;
    for (const auto& v : vs) n += v.kind == kind ? 1 : 0;
    return n;
}

}  // namespace

TEST_CASE("all-zeros schedule reports one demand violation per EV") {
    Scenario sc = two_ev_scenario();
    ChargingSchedule s = ChargingSchedule::from_kappa(
        sc, Eigen::ArrayXXi::Zero(2, 96));
    auto violations = verify_schedule(sc, s);
    CHECK(violations.size() == 2);
    CHECK(count_kind(violations, ViolationKind::Demand) == 2);
    CHECK(violations[0].ev == 0);
    CHECK(violations[1].ev == 1);
}

TEST_CASE("charging while away is flagged per offending slot") {
    Scenario sc = two_ev_scenario();
    Eigen::ArrayXXi kappa = Eigen::ArrayXXi::Zero(2, 96);
    // EV 0 charges enough, but three of its slots sit in the away window.
    for (int t = 61; t < 73; ++t) kappa(0, t) = 1;
    for (int t = 0; t < 12; ++t) kappa(1, t) = 1;
    auto violations =
        verify_schedule(sc, ChargingSchedule::from_kappa(sc, kappa));
    CHECK(count_kind(violations, ViolationKind::Availability) == 3);
    for (const auto& v : violations) {
        if (v.kind == ViolationKind::Availability) {
            CHECK(v.ev == 0);
            CHECK(v.slot >= 61);
            CHECK(v.slot < 64);
        }
    }
}

TEST_CASE("capacity violations name the slot") {
    Scenario sc = two_ev_scenario();
    Eigen::ArrayXd load = sc.profile.kw;
    load[10] = 40.0;  // headroom 10 < 2 * 7.2
    sc.profile.kw = load;
    Eigen::ArrayXXi kappa = Eigen::ArrayXXi::Zero(2, 96);
    for (int t = 8; t < 20; ++t) {
        kappa(0, t) = 1;
        kappa(1, t) = 1;
    }
    auto violations =
        verify_schedule(sc, ChargingSchedule::from_kappa(sc, kappa));
    REQUIRE(count_kind(violations, ViolationKind::Capacity) == 1);
    for (const auto& v : violations) {
        if (v.kind == ViolationKind::Capacity) CHECK(v.slot == 10);
    }
}

TEST_CASE("run length and switch budget") {
    Scenario sc = two_ev_scenario();
    SUBCASE("short run flagged, full-length end-of-day run accepted") {
        Eigen::ArrayXXi kappa = Eigen::ArrayXXi::Zero(2, 96);
        for (int t = 0; t < 12; ++t) kappa(0, t) = 1;
        kappa(0, 20) = 1;
        kappa(0, 21) = 1;  // run of 2
        for (int t = 92; t < 96; ++t) kappa(1, t) = 1;
        for (int t = 0; t < 9; ++t) kappa(1, t) = 1;
        auto violations =
            verify_schedule(sc, ChargingSchedule::from_kappa(sc, kappa));
        CHECK(count_kind(violations, ViolationKind::RunLength) == 1);
        for (const auto& v : violations) {
            if (v.kind == ViolationKind::RunLength) {
                CHECK(v.ev == 0);
                CHECK(v.slot == 20);
            }
        }
    }
    SUBCASE("turn-on count includes a run starting at slot 0") {
        Eigen::ArrayXXi kappa = Eigen::ArrayXXi::Zero(2, 96);
        // Five separate runs of 4 for EV 1, the first at slot 0.
        for (int r = 0; r < 5; ++r) {
            for (int t = r * 10; t < r * 10 + 4; ++t) kappa(1, t) = 1;
        }
        for (int t = 0; t < 12; ++t) kappa(0, t) = 1;
        auto violations =
            verify_schedule(sc, ChargingSchedule::from_kappa(sc, kappa));
        REQUIRE(count_kind(violations, ViolationKind::SwitchBudget) == 1);
        for (const auto& v : violations) {
            if (v.kind == ViolationKind::SwitchBudget) CHECK(v.ev == 1);
        }
    }
}

TEST_CASE("a clean schedule produces no findings") {
    Scenario sc = two_ev_scenario();
    Eigen::ArrayXXi kappa = Eigen::ArrayXXi::Zero(2, 96);
    for (int t = 0; t < 12; ++t) kappa(0, t) = 1;   // 21.6 kWh >= 20
    for (int t = 12; t < 24; ++t) kappa(1, t) = 1;
    CHECK(verify_schedule(sc, ChargingSchedule::from_kappa(sc, kappa)).empty());
}

TEST_CASE("negative base load adds headroom rather than tripping capacity") {
    Scenario sc = two_ev_scenario();
    Eigen::ArrayXd load = Eigen::ArrayXd::Constant(96, -5.0);  // backfeed
    sc.profile.kw = load;
    Eigen::ArrayXXi kappa = Eigen::ArrayXXi::Zero(2, 96);
    for (int t = 0; t < 12; ++t) {
        kappa(0, t) = 1;
        kappa(1, t) = 1;
    }
    auto violations =
        verify_schedule(sc, ChargingSchedule::from_kappa(sc, kappa));
    CHECK(count_kind(violations, ViolationKind::Capacity) == 0);
}
