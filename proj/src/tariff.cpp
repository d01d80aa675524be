#include "hostcap/tariff.hpp"

#include <array>
#include <fstream>

#include "hostcap/common.hpp"
#include "json_convert.hpp"

namespace hostcap {

namespace {

int band_width(const TariffBand& b, int num_slots) {
    if (b.start_slot == b.end_slot) return num_slots;
    if (b.start_slot < b.end_slot) return b.end_slot - b.start_slot;
    return num_slots - b.start_slot + b.end_slot;
}

}  // namespace

void TouTariff::validate() const {
    require(num_slots >= 8, "TouTariff: num_slots must be >= 8");
    std::array<int, 13> month_hits{};
    require(!seasons.empty(), "TouTariff: at least one season required");
    for (const auto& season : seasons) {
        require(!season.months.empty(), "TouTariff: season without months");
        for (int m : season.months) {
            require(m >= 1 && m <= 12, "TouTariff: month out of range");
            ++month_hits[static_cast<std::size_t>(m)];
        }
        require(!season.bands.empty(), "TouTariff: season without bands");
        int covered = 0;
        std::vector<int> slot_hits(static_cast<std::size_t>(num_slots), 0);
        for (const auto& band : season.bands) {
            require(band.start_slot >= 0 && band.start_slot < num_slots &&
                        band.end_slot >= 0 && band.end_slot < num_slots,
                    "TouTariff: band slot out of range");
            require(band.price_cents_per_kwh > 0.0,
                    "TouTariff: prices must be positive");
            covered += band_width(band, num_slots);
            for (int s = 0; s < num_slots; ++s) {
                if (band.contains(s)) ++slot_hits[static_cast<std::size_t>(s)];
            }
        }
        require(covered == num_slots,
                "TouTariff: season bands must cover the day exactly once");
        for (int s = 0; s < num_slots; ++s) {
            require(slot_hits[static_cast<std::size_t>(s)] == 1,
                    "TouTariff: band overlap or gap at slot " + std::to_string(s));
        }
    }
    for (int m = 1; m <= 12; ++m) {
        require(month_hits[static_cast<std::size_t>(m)] == 1,
                "TouTariff: month " + std::to_string(m) +
                    " must appear in exactly one season");
    }
}

const TariffSeason& TouTariff::season_for(int month) const {
    require(month >= 1 && month <= 12, "price_at: month out of range");
    for (const auto& season : seasons) {
        for (int m : season.months) {
            if (m == month) return season;
        }
    }
    throw std::runtime_error("TouTariff: month " + std::to_string(month) +
                             " not covered by any season");
}

double price_at(const TouTariff& tariff, int month, int slot) {
    require(slot >= 0 && slot < tariff.num_slots, "price_at: slot out of range");
    const TariffSeason& season = tariff.season_for(month);
    for (const auto& band : season.bands) {
        if (band.contains(slot)) return band.price_cents_per_kwh;
    }
    throw std::runtime_error("TouTariff: no band contains slot " +
                             std::to_string(slot));
}

Eigen::ArrayXd price_curve(const TouTariff& tariff, int month) {
    Eigen::ArrayXd prices(tariff.num_slots);
    for (int s = 0; s < tariff.num_slots; ++s) {
        prices[s] = price_at(tariff, month, s);
    }
    return prices;
}

TouTariff srp_default_tariff() {
    TouTariff t;
    t.num_slots = 96;
    // Winter, Nov through Apr: 5AM-9AM and 5PM-9PM at 11.45, rest at 8.85.
    t.seasons.push_back({{11, 12, 1, 2, 3, 4},
                         {{20, 36, 11.45},
                          {36, 68, 8.85},
                          {68, 84, 11.45},
                          {84, 20, 8.85}}});
    // Summer, May / June / Sept. / Oct.: 2PM-8PM at 22.70, rest at 9.03.
    t.seasons.push_back({{5, 6, 9, 10}, {{56, 80, 22.70}, {80, 56, 9.03}}});
    // Summer peak, July / Aug.: 2PM-8PM at 25.85, rest at 9.06.
    t.seasons.push_back({{7, 8}, {{56, 80, 25.85}, {80, 56, 9.06}}});
    t.validate();
    return t;
}

TouTariff tariff_from_json(const nlohmann::json& j) {
    TouTariff t;
    t.num_slots = j.value("num_slots", 96);
    for (const auto& js : j.at("seasons")) {
        TariffSeason season;
        season.months = js.at("months").get<std::vector<int>>();
        for (const auto& jb : js.at("bands")) {
            TariffBand band;
            band.start_slot = jb.at("start_slot").get<int>();
            band.end_slot = jb.at("end_slot").get<int>();
            band.price_cents_per_kwh = jb.at("price").get<double>();
            season.bands.push_back(band);
        }
        t.seasons.push_back(std::move(season));
    }
    t.validate();
    return t;
}

nlohmann::json tariff_to_json(const TouTariff& t) {
    nlohmann::json j;
    j["num_slots"] = t.num_slots;
    j["seasons"] = nlohmann::json::array();
    for (const auto& season : t.seasons) {
        nlohmann::json js;
        js["months"] = season.months;
        js["bands"] = nlohmann::json::array();
        for (const auto& band : season.bands) {
            js["bands"].push_back({{"start_slot", band.start_slot},
                                   {"end_slot", band.end_slot},
                                   {"price", band.price_cents_per_kwh}});
        }
        j["seasons"].push_back(std::move(js));
    }
    return j;
}

TouTariff load_tariff_json(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), "cannot open tariff file: " + path);
    nlohmann::json j;
    in >> j;
    return tariff_from_json(j);
}

void save_tariff_json(const TouTariff& tariff, const std::string& path) {
    std::ofstream out(path);
    require(out.good(), "cannot write tariff file: " + path);
    out << tariff_to_json(tariff).dump(2) << "\n";
}

}  // namespace hostcap
