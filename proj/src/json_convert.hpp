#pragma once

// Internal JSON conversion helpers shared between the io translation units.

#include "json.hpp"

#include "hostcap/tariff.hpp"

namespace hostcap {

TouTariff tariff_from_json(const nlohmann::json& j);
nlohmann::json tariff_to_json(const TouTariff& t);

}  // namespace hostcap
