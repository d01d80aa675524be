#include "hostcap/ami_io.hpp"

#include <algorithm>
#include <charconv>
#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "hostcap/common.hpp"

namespace hostcap {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

double parse_double(const std::string& s, const std::string& where) {
    try {
        std::size_t pos = 0;
        double v = std::stod(s, &pos);
        require(pos == s.size(), where + ": trailing characters in '" + s + "'");
        return v;
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument(where + ": cannot parse number '" + s + "'");
    }
}

long parse_long(const std::string& s, const std::string& where) {
    try {
        std::size_t pos = 0;
        long v = std::stol(s, &pos);
        require(pos == s.size(), where + ": trailing characters in '" + s + "'");
        return v;
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument(where + ": cannot parse integer '" + s + "'");
    }
}

std::string at_line(const std::string& path, std::size_t line_no) {
    return path + ":" + std::to_string(line_no);
}

// Shortest decimal text that round-trips the double exactly.
std::string exact_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    double back = 0.0;
    std::sscanf(buf, "%lf", &back);
    for (int prec = 1; prec <= 16; ++prec) {
        char tight[40];
        std::snprintf(tight, sizeof tight, "%.*g", prec, v);
        double parsed = 0.0;
        std::sscanf(tight, "%lf", &parsed);
        if (parsed == v) return tight;
    }
    return buf;
}

}  // namespace

std::map<std::string, int> load_customer_counts(const std::string& metadata_path) {
    std::ifstream in(metadata_path);
    require(in.good(), "cannot open metadata file: " + metadata_path);
    std::string line;
    std::size_t line_no = 0;
    std::map<std::string, int> counts;
    while (std::getline(in, line)) {
        ++line_no;
        if (line_no == 1) {
            require(line == "transformer_id,capacity_kw,customer_count",
                    metadata_path + ": unexpected header '" + line + "'");
            continue;
        }
        if (line.empty()) continue;
        auto fields = split_csv_line(line);
        require(fields.size() == 3,
                at_line(metadata_path, line_no) + ": expected 3 fields");
        counts[fields[0]] = static_cast<int>(
            parse_long(fields[2], at_line(metadata_path, line_no)));
    }
    return counts;
}

std::vector<Transformer> load_ami_csv(const std::string& ami_path,
                                      const std::string& metadata_path) {
    // Metadata first: capacity and customer count per transformer.
    struct Meta {
        double capacity;
        int customers;
    };
    std::map<std::string, Meta> meta;
    {
        std::ifstream in(metadata_path);
        require(in.good(), "cannot open metadata file: " + metadata_path);
        std::string line;
        std::size_t line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            if (line_no == 1) {
                require(line == "transformer_id,capacity_kw,customer_count",
                        metadata_path + ": unexpected header '" + line + "'");
                continue;
            }
            if (line.empty()) continue;
            auto fields = split_csv_line(line);
            require(fields.size() == 3,
                    at_line(metadata_path, line_no) + ": expected 3 fields");
            std::string where = at_line(metadata_path, line_no);
            meta[fields[0]] = {parse_double(fields[1], where),
                               static_cast<int>(parse_long(fields[2], where))};
        }
    }

    std::ifstream in(ami_path);
    require(in.good(), "cannot open AMI file: " + ami_path);
    std::string line;
    std::size_t line_no = 0;

    std::string expected_header = "transformer_id,date";
    for (int i = 0; i < 96; ++i) {
        char buf[8];
        std::snprintf(buf, sizeof buf, ",p%02d", i);
        expected_header += buf;
    }

    std::map<std::string, std::vector<LoadProfile>> by_id;
    std::set<std::pair<std::string, std::string>> seen;
    while (std::getline(in, line)) {
        ++line_no;
        if (line_no == 1) {
            require(line == expected_header,
                    ami_path + ": unexpected header (want transformer_id,date,"
                               "p00..p95)");
            continue;
        }
        if (line.empty()) continue;
        auto fields = split_csv_line(line);
        std::string where = at_line(ami_path, line_no);
        require(fields.size() == 98,
                where + ": expected 98 fields, got " +
                    std::to_string(fields.size()));
        LoadProfile p;
        p.transformer_id = fields[0];
        p.date = fields[1];
        p.kw.resize(96);
        for (int i = 0; i < 96; ++i) {
            p.kw[i] = parse_double(fields[static_cast<std::size_t>(i) + 2], where);
        }
        p.validate();
        require(seen.emplace(p.transformer_id, p.date).second,
                where + ": duplicate profile for " + p.transformer_id + "/" +
                    p.date);
        by_id[p.transformer_id].push_back(std::move(p));
    }

    std::vector<Transformer> out;
    for (auto& [id, profiles] : by_id) {
        auto it = meta.find(id);
        require(it != meta.end(),
                ami_path + ": no metadata for transformer " + id);
        Transformer tr;
        tr.id = id;
        tr.capacity_kw = it->second.capacity;
        tr.customer_count = it->second.customers;
        std::sort(profiles.begin(), profiles.end(),
                  [](const LoadProfile& a, const LoadProfile& b) {
                      return a.date < b.date;
                  });
        tr.profiles = std::move(profiles);
        tr.validate();
        out.push_back(std::move(tr));
    }
    return out;
}

void write_ami_csv(std::span<const Transformer> transformers,
                   const std::string& path) {
    std::ofstream out(path);
    require(out.good(), "cannot write AMI file: " + path);
    out << "transformer_id,date";
    for (int i = 0; i < 96; ++i) {
        char buf[8];
        std::snprintf(buf, sizeof buf, ",p%02d", i);
        out << buf;
    }
    out << "\n";
    for (const Transformer& tr : transformers) {
        for (const LoadProfile& p : tr.profiles) {
            out << p.transformer_id << "," << p.date;
            for (Eigen::Index i = 0; i < p.kw.size(); ++i) {
                out << "," << exact_double(p.kw[i]);
            }
            out << "\n";
        }
    }
}

void write_metadata_csv(std::span<const Transformer> transformers,
                        const std::string& path) {
    std::ofstream out(path);
    require(out.good(), "cannot write metadata file: " + path);
    out << "transformer_id,capacity_kw,customer_count\n";
    for (const Transformer& tr : transformers) {
        out << tr.id << "," << exact_double(tr.capacity_kw) << ","
            << tr.customer_count << "\n";
    }
}

void write_records_csv(std::span<const EvaluationRecord> records,
                       const std::string& path) {
    std::ofstream out(path);
    require(out.good(), "cannot write records file: " + path);
    out << "transformer_id,date,charger_power_kw,desired_ev,supported_ev,"
           "status,scenario_seed,cost_cents\n";
    char buf[64];
    for (const EvaluationRecord& r : records) {
        out << r.transformer_id << "," << r.date << ","
            << exact_double(r.charger_power_kw) << "," << r.desired_ev << ","
            << r.supported_ev << "," << to_string(r.status) << ","
            << r.scenario_seed << ",";
        if (r.cost_cents.has_value()) {
            std::snprintf(buf, sizeof buf, "%.4f", *r.cost_cents);
            out << buf;
        }
        out << "\n";
    }
}

std::vector<EvaluationRecord> load_records_csv(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), "cannot open records file: " + path);
    std::string line;
    std::size_t line_no = 0;
    std::vector<EvaluationRecord> out;
    while (std::getline(in, line)) {
        ++line_no;
        if (line_no == 1) {
            require(line ==
                        "transformer_id,date,charger_power_kw,desired_ev,"
                        "supported_ev,status,scenario_seed,cost_cents",
                    path + ": unexpected header");
            continue;
        }
        if (line.empty()) continue;
        auto fields = split_csv_line(line);
        std::string where = at_line(path, line_no);
        require(fields.size() == 8, where + ": expected 8 fields");
        EvaluationRecord r;
        r.transformer_id = fields[0];
        r.date = fields[1];
        r.charger_power_kw = parse_double(fields[2], where);
        r.desired_ev = static_cast<int>(parse_long(fields[3], where));
        r.supported_ev = static_cast<int>(parse_long(fields[4], where));
        r.status = eval_status_from_string(fields[5]);
        r.scenario_seed = static_cast<std::uint64_t>(
            std::strtoull(fields[6].c_str(), nullptr, 10));
        if (!fields[7].empty()) {
            r.cost_cents = parse_double(fields[7], where);
        }
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace hostcap
