#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hostcap/time_grid.hpp"

namespace hostcap {

// One price band over slot indices [start_slot, end_slot). end_slot <=
// start_slot wraps past midnight; start_slot == end_slot covers the whole
// day.
struct TariffBand {
    int start_slot = 0;
    int end_slot = 0;
    double price_cents_per_kwh = 0.0;

    bool contains(int slot) const {
        if (start_slot == end_slot) return true;
        if (start_slot < end_slot) return slot >= start_slot && slot < end_slot;
        return slot >= start_slot || slot < end_slot;
    }
};

struct TariffSeason {
    std::vector<int> months;  // calendar months 1-12
    std::vector<TariffBand> bands;
};

// Time-of-use plan: seasons partition the twelve months; a season's bands
// tile the day exactly once.
struct TouTariff {
    int num_slots = 96;
    std::vector<TariffSeason> seasons;

    void validate() const;
    const TariffSeason& season_for(int month) const;
};

double price_at(const TouTariff& tariff, int month, int slot);

// Per-slot prices for a whole day in the given month.
Eigen::ArrayXd price_curve(const TouTariff& tariff, int month);

// The bundled default plan: winter Nov-Apr (11.45 / 8.85), summer
// May/Jun/Sep/Oct (22.70 / 9.03), summer-peak Jul/Aug (25.85 / 9.06).
TouTariff srp_default_tariff();

TouTariff load_tariff_json(const std::string& path);
void save_tariff_json(const TouTariff& tariff, const std::string& path);

}  // namespace hostcap
