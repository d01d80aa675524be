#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hostcap/load_model.hpp"

namespace hostcap {

// Two day-shape archetypes: a summer-peaking day (evening peak between
// 5 PM and 9 PM at 70-95% of capacity) and a light spring day with a
// possibly negative midday trough from rooftop PV backfeed.
enum class ProfileArchetype { JulyLike, MarchLike };

const char* to_string(ProfileArchetype a);
ProfileArchetype archetype_from_string(const std::string& s);

struct SynthProfileSpec {
    ProfileArchetype archetype = ProfileArchetype::JulyLike;
    double capacity_kw = 50.0;
    int customer_count = 6;
    std::uint64_t seed = 0;

    void validate() const {
        require(capacity_kw > 0.0, "SynthProfileSpec: capacity must be positive");
        require(customer_count >= 1,
                "SynthProfileSpec: customer_count must be >= 1");
    }
};

LoadProfile synth_profile(const SynthProfileSpec& spec,
                          const std::string& transformer_id = "SYNTH",
                          const std::string& date = "2024-07-01");

// The bundled six-transformer demo feeder with July-like and March-like
// days. Months outside {3, 7} are rejected.
std::vector<Transformer> make_demo_feeder(std::uint64_t seed,
                                          int days_per_month = 10,
                                          const std::vector<int>& months = {3, 7});

}  // namespace hostcap
