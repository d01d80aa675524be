#pragma once

#include <span>
#include <string>

#include "hostcap/evaluation.hpp"

namespace hostcap {

enum class ReportFormat { Csv, Markdown };

// Writes one hosting-capacity table: a row per transformer (sorted by id),
// columns Trans Code, # Cust, # EV, then per charging power the
// Infeasibility / Less #EV / Desired #EV / Unresolved percentages with two
// decimals. All aggregates must belong to a single month; the caller
// splits by month.
void write_report(std::span<const AggregateStats> aggregates,
                  ReportFormat format, const std::string& path);

void write_aggregates_csv(std::span<const AggregateStats> aggregates,
                          const std::string& path);

}  // namespace hostcap
