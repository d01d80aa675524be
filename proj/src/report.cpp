#include "hostcap/report.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>

#include "hostcap/common.hpp"

namespace hostcap {

namespace {

std::string format_power(double kw) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", kw);
    std::string s = buf;
    while (!s.empty() && s.back() == '0') s.pop_back();
    if (!s.empty() && s.back() == '.') s.pop_back();
    return s;
}

std::string pct(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

}  // namespace

void write_report(std::span<const AggregateStats> aggregates,
                  ReportFormat format, const std::string& path) {
    require(!aggregates.empty(), "write_report: no aggregates");
    int month = aggregates.front().month;
    for (const AggregateStats& a : aggregates) {
        require(a.month == month,
                "write_report: aggregates span several months; split by month");
    }

    std::set<double> powers;
    for (const AggregateStats& a : aggregates) powers.insert(a.charger_power_kw);

    struct RowInfo {
        int customers = 0;
        int desired = 0;
        std::map<double, const AggregateStats*> by_power;
    };
    std::map<std::string, RowInfo> rows;
    for (const AggregateStats& a : aggregates) {
        RowInfo& r = rows[a.transformer_id];
        r.customers = a.customer_count;
        r.desired = a.desired_ev;
        r.by_power[a.charger_power_kw] = &a;
    }

    std::vector<std::string> header{"Trans Code", "# Cust", "# EV"};
    for (double p : powers) {
        std::string tag = format_power(p) + " kW (%)";
        header.push_back("Infeasibility " + tag);
        header.push_back("Less #EV " + tag);
        header.push_back("Desired #EV " + tag);
        header.push_back("Unresolved " + tag);
    }

    std::ofstream out(path);
    require(out.good(), "cannot write report file: " + path);

    auto emit_row = [&](const std::vector<std::string>& cells) {
        if (format == ReportFormat::Csv) {
            for (std::size_t i = 0; i < cells.size(); ++i) {
                out << (i == 0 ? "" : ",") << cells[i];
            }
            out << "\n";
        } else {
            out << "|";
            for (const std::string& c : cells) out << " " << c << " |";
            out << "\n";
        }
    };

    emit_row(header);
    if (format == ReportFormat::Markdown) {
        out << "|";
        for (std::size_t i = 0; i < header.size(); ++i) out << " --- |";
        out << "\n";
    }
    for (const auto& [id, info] : rows) {
        std::vector<std::string> cells{id, std::to_string(info.customers),
                                       std::to_string(info.desired)};
        for (double p : powers) {
            auto it = info.by_power.find(p);
            if (it == info.by_power.end()) {
                cells.insert(cells.end(), {"", "", "", ""});
                continue;
            }
            const AggregateStats& a = *it->second;
            cells.push_back(pct(a.pct_infeasible));
            cells.push_back(pct(a.pct_less));
            cells.push_back(pct(a.pct_desired));
            cells.push_back(pct(a.pct_unresolved));
        }
        emit_row(cells);
    }
}

void write_aggregates_csv(std::span<const AggregateStats> aggregates,
                          const std::string& path) {
    std::ofstream out(path);
    require(out.good(), "cannot write aggregates file: " + path);
    out << "transformer_id,month,customer_count,desired_ev,charger_power_kw,"
           "n_scenarios,pct_infeasible,pct_less_than_desired,pct_desired,"
           "pct_unresolved,confidence_rate\n";
    std::vector<const AggregateStats*> sorted;
    for (const AggregateStats& a : aggregates) sorted.push_back(&a);
    std::sort(sorted.begin(), sorted.end(),
              [](const AggregateStats* a, const AggregateStats* b) {
                  return std::tie(a->transformer_id, a->month,
                                  a->charger_power_kw) <
                         std::tie(b->transformer_id, b->month,
                                  b->charger_power_kw);
              });
    for (const AggregateStats* a : sorted) {
        out << a->transformer_id << "," << a->month << "," << a->customer_count
            << "," << a->desired_ev << "," << format_power(a->charger_power_kw)
            << "," << a->n_scenarios << "," << pct(a->pct_infeasible) << ","
            << pct(a->pct_less) << "," << pct(a->pct_desired) << ","
            << pct(a->pct_unresolved) << "," << pct(a->confidence_rate) << "\n";
    }
}

}  // namespace hostcap
