#pragma once

#include <stdexcept>
#include <string>

namespace hostcap {

// Relative tolerance for comparisons between physical quantities (kW, kWh).
inline constexpr double kRelTol = 1e-9;

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

inline double abs_tol(double reference) {
    double mag = reference < 0 ? -reference : reference;
    return kRelTol * (mag < 1.0 ? 1.0 : mag);
}

}  // namespace hostcap
