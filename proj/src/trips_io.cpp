#include "hostcap/trips_io.hpp"

#include <fstream>
#include <sstream>

#include "hostcap/common.hpp"
#include "json.hpp"

namespace hostcap {

std::vector<TripRecord> load_trips_csv(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), "cannot open trips file: " + path);
    std::string line;
    std::size_t line_no = 0;
    std::vector<TripRecord> out;
    while (std::getline(in, line)) {
        ++line_no;
        if (line_no == 1) {
            require(line == "depart_hour,return_hour,weight",
                    path + ": unexpected header '" + line + "'");
            continue;
        }
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string a;
        std::string b;
        std::string c;
        bool ok = static_cast<bool>(std::getline(ss, a, ',')) &&
                  static_cast<bool>(std::getline(ss, b, ',')) &&
                  static_cast<bool>(std::getline(ss, c));
        require(ok, path + ":" + std::to_string(line_no) + ": expected 3 fields");
        try {
            out.push_back({std::stoi(a), std::stoi(b), std::stod(c)});
        } catch (const std::exception&) {
            throw std::invalid_argument(path + ":" + std::to_string(line_no) +
                                        ": cannot parse trip record");
        }
    }
    return out;
}

void save_pmf_json(const JointCommutePmf& pmf, const std::string& path) {
    nlohmann::json j;
    j["tag"] = pmf.tag;
    nlohmann::json rows = nlohmann::json::array();
    for (int d = 0; d < 24; ++d) {
        nlohmann::json row = nlohmann::json::array();
        for (int r = 0; r < 24; ++r) row.push_back(pmf.hour_bins(d, r));
        rows.push_back(std::move(row));
    }
    j["hour_bins"] = std::move(rows);
    std::ofstream out(path);
    require(out.good(), "cannot write PMF file: " + path);
    out << j.dump(2) << "\n";
}

JointCommutePmf load_pmf_json(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), "cannot open PMF file: " + path);
    nlohmann::json j;
    in >> j;
    JointCommutePmf pmf;
    pmf.tag = j.value("tag", "");
    const auto& rows = j.at("hour_bins");
    require(rows.size() == 24, path + ": hour_bins must have 24 rows");
    for (int d = 0; d < 24; ++d) {
        const auto& row = rows[static_cast<std::size_t>(d)];
        require(row.size() == 24, path + ": hour_bins rows must have 24 entries");
        for (int r = 0; r < 24; ++r) {
            pmf.hour_bins(d, r) = row[static_cast<std::size_t>(r)].get<double>();
        }
    }
    pmf.validate();
    return pmf;
}

}  // namespace hostcap
