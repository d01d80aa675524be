#include "hostcap/load_model.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "hostcap/common.hpp"

namespace hostcap {

int month_of_date(const std::string& iso_date) {
    require(iso_date.size() == 10 && iso_date[4] == '-' && iso_date[7] == '-',
            "date must be formatted YYYY-MM-DD: " + iso_date);
    for (std::size_t i : {0u, 1u, 2u, 3u, 5u, 6u, 8u, 9u}) {
        require(std::isdigit(static_cast<unsigned char>(iso_date[i])) != 0,
                "date must be formatted YYYY-MM-DD: " + iso_date);
    }
    int month = (iso_date[5] - '0') * 10 + (iso_date[6] - '0');
    require(month >= 1 && month <= 12, "date has invalid month: " + iso_date);
    int day = (iso_date[8] - '0') * 10 + (iso_date[9] - '0');
    require(day >= 1 && day <= 31, "date has invalid day: " + iso_date);
    return month;
}

void LoadProfile::validate(const TimeGrid& grid) const {
    grid.validate();
    month_of_date(date);
    require(kw.size() == grid.num_slots,
            "LoadProfile " + transformer_id + "/" + date + ": expected " +
                std::to_string(grid.num_slots) + " readings, got " +
                std::to_string(kw.size()));
    require(kw.allFinite(), "LoadProfile " + transformer_id + "/" + date +
                                ": readings must be finite");
}

void Transformer::validate(const TimeGrid& grid) const {
    require(!id.empty(), "Transformer: id must not be empty");
    require(capacity_kw > 0.0, "Transformer " + id + ": capacity must be positive");
    require(customer_count >= 1,
            "Transformer " + id + ": customer_count must be >= 1");
    for (const auto& p : profiles) {
        p.validate(grid);
        require(p.transformer_id == id,
                "Transformer " + id + ": profile tagged " + p.transformer_id);
    }
}

const LoadProfile& Transformer::profile_on(const std::string& date) const {
    for (const auto& p : profiles) {
        if (p.date == date) return p;
    }
    throw std::invalid_argument("Transformer " + id + ": no profile for " + date);
}

std::vector<std::string> Transformer::dates_in_month(int month) const {
    std::vector<std::string> dates;
    for (const auto& p : profiles) {
        if (p.month() == month) dates.push_back(p.date);
    }
    std::sort(dates.begin(), dates.end());
    return dates;
}

Eigen::ArrayXd headroom(const LoadProfile& profile, double capacity_kw) {
    return capacity_kw - profile.kw;
}

int desired_ev_count(int customer_count) {
    require(customer_count >= 1, "desired_ev_count: customer_count must be >= 1");
    return (customer_count + 1) / 2;
}

}  // namespace hostcap
