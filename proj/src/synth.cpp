#include "hostcap/synth.hpp"

#include <cmath>
#include <cstdio>

#include "hostcap/rng.hpp"

namespace hostcap {

namespace {

double bump(double t, double center, double width) {
    double z = (t - center) / width;
    return std::exp(-0.5 * z * z);
}

// Small per-slot jitter smoothed over three slots so it perturbs levels
// without creating spiky argmax flips.
Eigen::ArrayXd smooth_noise(SplitMix64& rng, int n, double amplitude) {
    Eigen::ArrayXd raw(n);
    for (int t = 0; t < n; ++t) raw[t] = rng.uniform(-amplitude, amplitude);
    Eigen::ArrayXd out(n);
    for (int t = 0; t < n; ++t) {
        out[t] = (raw[(t + n - 1) % n] + raw[t] + raw[(t + 1) % n]) / 3.0;
    }
    return out;
}

std::string format_date(int month, int day) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "2024-%02d-%02d", month, day);
    return buf;
}

}  // namespace

const char* to_string(ProfileArchetype a) {
    return a == ProfileArchetype::JulyLike ? "july_like" : "march_like";
}

ProfileArchetype archetype_from_string(const std::string& s) {
    if (s == "july_like") return ProfileArchetype::JulyLike;
    if (s == "march_like") return ProfileArchetype::MarchLike;
    throw std::invalid_argument("unknown profile archetype: " + s);
}

LoadProfile synth_profile(const SynthProfileSpec& spec,
                          const std::string& transformer_id,
                          const std::string& date) {
    spec.validate();
    const int n = 96;
    const double cap = spec.capacity_kw;
    SplitMix64 rng(spec.seed);

    Eigen::ArrayXd kw(n);
    if (spec.archetype == ProfileArchetype::JulyLike) {
        double valley = cap * rng.uniform(0.18, 0.28);
        double peak = cap * rng.uniform(0.72, 0.93);
        double morning_amp = cap * rng.uniform(0.10, 0.20);
        double morning_center = 30.0 + static_cast<double>(rng.below(9));
        double evening_center = 70.0 + static_cast<double>(rng.below(13));
        for (int t = 0; t < n; ++t) {
            kw[t] = valley + morning_amp * bump(t, morning_center, 9.0) +
                    (peak - valley) * bump(t, evening_center, 7.0);
        }
        kw += smooth_noise(rng, n, 0.008 * cap);
        kw = kw.max(0.0);
    } else {
        double valley = cap * rng.uniform(0.10, 0.16);
        double pv_depth = cap * rng.uniform(0.15, 0.35);
        double pv_center = 46.0 + static_cast<double>(rng.below(7));
        double evening_amp = cap * rng.uniform(0.16, 0.30);
        double evening_center = 70.0 + static_cast<double>(rng.below(11));
        double morning_amp = cap * rng.uniform(0.04, 0.10);
        for (int t = 0; t < n; ++t) {
            kw[t] = valley + morning_amp * bump(t, 30.0, 8.0) -
                    pv_depth * bump(t, pv_center, 10.0) +
                    evening_amp * bump(t, evening_center, 7.0);
        }
        kw += smooth_noise(rng, n, 0.008 * cap);
    }

    LoadProfile p;
    p.transformer_id = transformer_id;
    p.date = date;
    p.kw = std::move(kw);
    return p;
}

std::vector<Transformer> make_demo_feeder(std::uint64_t seed,
                                          int days_per_month,
                                          const std::vector<int>& months) {
    require(days_per_month >= 1 && days_per_month <= 28,
            "make_demo_feeder: days_per_month must be in [1, 28]");
    struct Entry {
        const char* id;
        double capacity;
        int customers;
    };
    const Entry entries[] = {
        {"T01", 50.0, 5},  {"T02", 50.0, 7},  {"T03", 50.0, 9},
        {"T04", 75.0, 9},  {"T05", 75.0, 12}, {"T06", 75.0, 14},
    };
    std::vector<Transformer> feeder;
    for (const Entry& e : entries) {
        Transformer tr;
        tr.id = e.id;
        tr.capacity_kw = e.capacity;
        tr.customer_count = e.customers;
        for (int month : months) {
            require(month == 3 || month == 7,
                    "make_demo_feeder: demo months are 3 and 7");
            ProfileArchetype arch = month == 7 ? ProfileArchetype::JulyLike
                                               : ProfileArchetype::MarchLike;
            for (int day = 1; day <= days_per_month; ++day) {
                SynthProfileSpec spec;
                spec.archetype = arch;
                spec.capacity_kw = e.capacity;
                spec.customer_count = e.customers;
                spec.seed = seed_combine(
                    seed_combine(seed_combine(seed, tr.id),
                                 static_cast<std::uint64_t>(month)),
                    static_cast<std::uint64_t>(day));
                tr.profiles.push_back(
                    synth_profile(spec, tr.id, format_date(month, day)));
            }
        }
        tr.validate();
        feeder.push_back(std::move(tr));
    }
    return feeder;
}

}  // namespace hostcap
