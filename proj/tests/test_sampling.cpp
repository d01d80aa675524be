#include "doctest.h"

#include <map>

#include "hostcap/commute_pmf.hpp"
#include "hostcap/rng.hpp"
#include "hostcap/soc_model.hpp"
#include "hostcap/trips_io.hpp"
#include "testutil.hpp"

using namespace hostcap;

TEST_CASE("splitmix streams are reproducible and substreams distinct") {
    SplitMix64 a(42);
    SplitMix64 b(42);
    for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());

    CHECK(seed_combine(1, "T01") != seed_combine(1, "T02"));
    CHECK(seed_combine(1, std::uint64_t{3}) != seed_combine(1, std::uint64_t{4}));
    CHECK(seed_combine(seed_combine(1, "a"), "b") !=
          seed_combine(seed_combine(1, "b"), "a"));
}

TEST_CASE("initial SOC sampler") {
    SocDistributions dist;
    SplitMix64 rng(7);
    SUBCASE("support") {
        for (int i = 0; i < 10000; ++i) {
            double s = sample_initial_soc(dist, rng);
            CHECK(s >= 0.20);
            CHECK(s <= 0.30);
        }
    }
    SUBCASE("law of large numbers: mean 0.25 within 0.001") {
        double sum = 0.0;
        const int n = 100000;
        for (int i = 0; i < n; ++i) sum += sample_initial_soc(dist, rng);
        CHECK(sum / n == doctest::Approx(0.25).epsilon(0.004));
        CHECK(std::abs(sum / n - 0.25) <= 0.001);
    }
    SUBCASE("degenerate bounds") {
        SocDistributions degenerate;
        degenerate.initial_low = degenerate.initial_high = 0.25;
        for (int i = 0; i < 100; ++i) {
            CHECK(sample_initial_soc(degenerate, rng) == 0.25);
        }
    }
}

TEST_CASE("final SOC sampler") {
    SocDistributions dist;
    SplitMix64 rng(11);
    SUBCASE("support and modal bin") {
        const int n = 100000;
        int bins[10] = {0};
        for (int i = 0; i < n; ++i) {
            double s = sample_final_soc(dist, rng);
            CHECK(s >= 0.80);
            CHECK(s <= 1.00);
            int b = static_cast<int>((s - 0.80) / 0.02);
            if (b > 9) b = 9;
            ++bins[b];
        }
        // Chi-squared with df=2 has its density maximum at zero, so the
        // lowest bin [0.80, 0.82) must dominate.
        for (int b = 1; b < 10; ++b) CHECK(bins[0] > bins[b]);
    }
    SUBCASE("degenerate scale pins the floor") {
        SocDistributions degenerate;
        degenerate.chi_scale = 0.0;
        for (int i = 0; i < 100; ++i) {
            CHECK(sample_final_soc(degenerate, rng) == 0.80);
        }
    }
}

TEST_CASE("chi-squared sampler matches its mean") {
    SplitMix64 rng(13);
    for (int df : {1, 2, 5}) {
        double sum = 0.0;
        const int n = 200000;
        for (int i = 0; i < n; ++i) sum += sample_chi_squared(rng, df);
        CHECK(sum / n == doctest::Approx(df).epsilon(0.02));
    }
}

TEST_CASE("build_commute_pmf weight arithmetic") {
    SUBCASE("single record") {
        std::vector<TripRecord> trips{{8, 16, 1.0}};
        JointCommutePmf pmf = build_commute_pmf(trips);
        CHECK(pmf.hour_bins(8, 16) == 1.0);
        CHECK(pmf.hour_bins.sum() == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("weights accumulate per cell") {
        std::vector<TripRecord> trips{{8, 16, 1.0}, {8, 16, 1.0}, {9, 17, 2.0}};
        JointCommutePmf pmf = build_commute_pmf(trips);
        CHECK(pmf.hour_bins(8, 16) == doctest::Approx(0.5));
        CHECK(pmf.hour_bins(9, 17) == doctest::Approx(0.5));
    }
    SUBCASE("overnight trips are dropped and counted") {
        std::vector<TripRecord> trips{{8, 16, 1.0}, {18, 6, 1.0}, {9, 9, 1.0}};
        TripValidationSummary summary;
        JointCommutePmf pmf = build_commute_pmf(trips, "tag", &summary);
        CHECK(summary.accepted == 1);
        CHECK(summary.rejected_overnight == 2);
        CHECK(pmf.hour_bins(8, 16) == 1.0);
        CHECK(pmf.tag == "tag");
    }
    SUBCASE("bad weights and hours are dropped and counted") {
        std::vector<TripRecord> trips{{8, 16, 1.0}, {8, 16, -1.0}, {25, 26, 1.0}};
        TripValidationSummary summary;
        build_commute_pmf(trips, "", &summary);
        CHECK(summary.rejected_bad_weight == 1);
        CHECK(summary.rejected_bad_hour == 1);
    }
    SUBCASE("empty or fully rejected input is an error") {
        std::vector<TripRecord> none;
        CHECK_THROWS_AS(build_commute_pmf(none), std::invalid_argument);
        std::vector<TripRecord> all_bad{{18, 6, 1.0}};
        CHECK_THROWS_AS(build_commute_pmf(all_bad), std::invalid_argument);
    }
}

TEST_CASE("bundled trip file: PMF marginals match a direct tally") {
    auto trips = load_trips_csv(hostcap::testutil::data_path("trips_demo.csv"));
    REQUIRE(!trips.empty());
    JointCommutePmf pmf = build_commute_pmf(trips);

    // Independent tally over the same records.
    double depart_hist[24] = {0};
    double return_hist[24] = {0};
    double total = 0.0;
    for (const TripRecord& t : trips) {
        if (t.depart_hour < 0 || t.depart_hour > 23 || t.return_hour < 0 ||
            t.return_hour > 23 || t.return_hour <= t.depart_hour ||
            !(t.weight > 0.0)) {
            continue;
        }
        depart_hist[t.depart_hour] += t.weight;
        return_hist[t.return_hour] += t.weight;
        total += t.weight;
    }
    REQUIRE(total > 0.0);
    for (int h = 0; h < 24; ++h) {
        CHECK(pmf.hour_bins.row(h).sum() ==
              doctest::Approx(depart_hist[h] / total).epsilon(1e-9));
        CHECK(pmf.hour_bins.col(h).sum() ==
              doctest::Approx(return_hist[h] / total).epsilon(1e-9));
    }
}

TEST_CASE("away interval sampling") {
    SUBCASE("deterministic single-cell PMF") {
        std::vector<TripRecord> trips{{8, 16, 1.0}};
        JointCommutePmf pmf = build_commute_pmf(trips);
        SplitMix64 rng(3);
        for (int i = 0; i < 50; ++i) {
            AwayInterval away = sample_away_interval(pmf, rng);
            CHECK(away.depart_slot == 32);
            CHECK(away.return_slot == 64);
        }
    }
    SUBCASE("two-cell frequencies within 0.02 of probabilities") {
        std::vector<TripRecord> trips{{8, 16, 1.0}, {9, 17, 1.0}};
        JointCommutePmf pmf = build_commute_pmf(trips);
        SplitMix64 rng(5);
        int first = 0;
        const int n = 10000;
        for (int i = 0; i < n; ++i) {
            auto [d, r] = sample_away_hours(pmf, rng);
            if (d == 8) {
                CHECK(r == 16);
                ++first;
            } else {
                CHECK(d == 9);
                CHECK(r == 17);
            }
        }
        CHECK(std::abs(first / static_cast<double>(n) - 0.5) <= 0.02);
    }
    SUBCASE("fixed seed reproduces the draw sequence") {
        const JointCommutePmf& pmf = hostcap::testutil::test_pmf();
        SplitMix64 a(99);
        SplitMix64 b(99);
        for (int i = 0; i < 200; ++i) {
            AwayInterval x = sample_away_interval(pmf, a);
            AwayInterval y = sample_away_interval(pmf, b);
            CHECK(x.depart_slot == y.depart_slot);
            CHECK(x.return_slot == y.return_slot);
        }
    }
    SUBCASE("intervals are contiguous, strictly inside the day") {
        const JointCommutePmf& pmf = hostcap::testutil::test_pmf();
        SplitMix64 rng(17);
        for (int i = 0; i < 1000; ++i) {
            AwayInterval away = sample_away_interval(pmf, rng);
            CHECK(away.depart_slot >= 0);
            CHECK(away.depart_slot < away.return_slot);
            CHECK(away.return_slot <= 95);
        }
    }
}

TEST_CASE("PMF validation") {
    JointCommutePmf pmf;
    pmf.hour_bins(8, 16) = 1.0;
    CHECK_NOTHROW(pmf.validate());
    SUBCASE("diagonal mass rejected") {
        pmf.hour_bins(8, 16) = 0.5;
        pmf.hour_bins(10, 10) = 0.5;
        CHECK_THROWS_AS(pmf.validate(), std::invalid_argument);
    }
    SUBCASE("below-diagonal mass rejected") {
        pmf.hour_bins(8, 16) = 0.5;
        pmf.hour_bins(16, 8) = 0.5;
        CHECK_THROWS_AS(pmf.validate(), std::invalid_argument);
    }
    SUBCASE("normalization enforced") {
        pmf.hour_bins(8, 16) = 0.9;
        CHECK_THROWS_AS(pmf.validate(), std::invalid_argument);
    }
    SUBCASE("negative entries rejected") {
        pmf.hour_bins(8, 16) = 1.5;
        pmf.hour_bins(9, 17) = -0.5;
        CHECK_THROWS_AS(pmf.validate(), std::invalid_argument);
    }
}
