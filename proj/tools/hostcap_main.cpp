// Command-line front end: coordinate one scenario, evaluate a feeder's
// hosting capacity, build commute PMFs, synthesize AMI-like profiles, and
// re-render reports from saved records.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hostcap/ami_io.hpp"
#include "hostcap/evaluation.hpp"
#include "hostcap/report.hpp"
#include "hostcap/scenario_json.hpp"
#include "hostcap/synth.hpp"
#include "hostcap/trips_io.hpp"
#include "hostcap/verify.hpp"

namespace fs = std::filesystem;
using namespace hostcap;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitUnresolved = 3;

struct RunConfig {
    std::string ami_csv;
    std::string metadata_csv;
    std::string trips_csv;
    std::string pmf_json;
    std::string tariff_json;
    std::vector<int> months{3, 7};
    std::vector<double> powers_kw{7.2, 11.5};
    int n_scenarios = 10;
    std::uint64_t master_seed = 1;
    double time_limit_secs = 10.0;
    int threads = 0;
    std::string out_dir = "out";
    double battery_kwh = 100.0;
    int tau_min = 4;
    int max_switches = 4;
};

RunConfig load_run_config(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), "cannot open config file: " + path);
    nlohmann::json j;
    in >> j;
    RunConfig c;
    c.ami_csv = j.value("ami_csv", "");
    c.metadata_csv = j.value("metadata_csv", "");
    c.trips_csv = j.value("trips_csv", "");
    c.pmf_json = j.value("pmf_json", "");
    c.tariff_json = j.value("tariff_json", "");
    if (j.contains("months")) c.months = j["months"].get<std::vector<int>>();
    if (j.contains("powers_kw")) {
        c.powers_kw = j["powers_kw"].get<std::vector<double>>();
    }
    c.n_scenarios = j.value("n_scenarios", c.n_scenarios);
    c.master_seed = j.value("master_seed", c.master_seed);
    c.time_limit_secs = j.value("time_limit_secs", c.time_limit_secs);
    c.threads = j.value("threads", c.threads);
    c.out_dir = j.value("out_dir", c.out_dir);
    c.battery_kwh = j.value("battery_kwh", c.battery_kwh);
    c.tau_min = j.value("tau_min", c.tau_min);
    c.max_switches = j.value("max_switches", c.max_switches);
    return c;
}

int cmd_coordinate(const std::string& scenario_path, const std::string& out_dir) {
    Scenario scenario = load_scenario_json(scenario_path);
    CoordinationResult result = solve(scenario);

    fs::create_directories(out_dir);
    write_result_json(result, (fs::path(out_dir) / "result.json").string());
    if (result.status == SolveStatus::Feasible) {
        auto violations = verify_schedule(scenario, *result.schedule);
        if (!violations.empty()) {
            std::cerr << "internal error: solver output failed verification: "
                      << violations.front().detail << "\n";
            return kExitError;
        }
        write_schedule_csv(*result.schedule,
                           (fs::path(out_dir) / "schedule.csv").string());
        std::printf("Feasible: cost %.4f cents, %llu nodes\n",
                    result.schedule->total_cost_cents,
                    static_cast<unsigned long long>(result.stats.nodes_explored));
        return kExitOk;
    }
    std::printf("%s: %s\n", to_string(result.status), result.proof_note.c_str());
    return result.status == SolveStatus::Infeasible ? kExitInfeasible
                                                    : kExitUnresolved;
}

int cmd_evaluate_feeder(const RunConfig& cfg) {
    require(!cfg.ami_csv.empty() && !cfg.metadata_csv.empty(),
            "evaluate-feeder: ami_csv and metadata_csv are required");
    std::vector<Transformer> feeder = load_ami_csv(cfg.ami_csv, cfg.metadata_csv);

    CampaignContext ctx;
    if (!cfg.pmf_json.empty()) {
        ctx.pmf = load_pmf_json(cfg.pmf_json);
    } else {
        require(!cfg.trips_csv.empty(),
                "evaluate-feeder: provide trips_csv or pmf_json");
        auto trips = load_trips_csv(cfg.trips_csv);
        TripValidationSummary summary;
        ctx.pmf = build_commute_pmf(trips, "", &summary);
        if (summary.rejected() > 0) {
            std::fprintf(stderr, "note: dropped %zu invalid trip record(s)\n",
                         summary.rejected());
        }
    }
    ctx.tariff = cfg.tariff_json.empty() ? srp_default_tariff()
                                         : load_tariff_json(cfg.tariff_json);
    ctx.ev.battery_kwh = cfg.battery_kwh;
    ctx.params.tau_min = cfg.tau_min;
    ctx.params.max_switches = cfg.max_switches;
    ctx.params.time_limit_seconds = cfg.time_limit_secs;

    CampaignPlan plan;
    plan.months = cfg.months;
    plan.powers_kw = cfg.powers_kw;
    plan.n_scenarios = cfg.n_scenarios;
    plan.master_seed = cfg.master_seed;
    plan.threads = cfg.threads;

    std::vector<EvaluationRecord> records = run_campaign(feeder, ctx, plan);
    require(!records.empty(), "evaluate-feeder: campaign produced no records");

    fs::create_directories(cfg.out_dir);
    write_records_csv(records, (fs::path(cfg.out_dir) / "records.csv").string());

    std::map<std::string, int> customers;
    for (const Transformer& t : feeder) customers[t.id] = t.customer_count;
    std::vector<AggregateStats> aggregates = aggregate(records, customers);
    write_aggregates_csv(aggregates,
                         (fs::path(cfg.out_dir) / "aggregates.csv").string());

    for (int month : plan.months) {
        std::vector<AggregateStats> month_rows;
        for (const AggregateStats& a : aggregates) {
            if (a.month == month) month_rows.push_back(a);
        }
        if (month_rows.empty()) continue;
        char name[32];
        std::snprintf(name, sizeof name, "report_m%02d", month);
        write_report(month_rows, ReportFormat::Csv,
                     (fs::path(cfg.out_dir) / (std::string(name) + ".csv")).string());
        write_report(month_rows, ReportFormat::Markdown,
                     (fs::path(cfg.out_dir) / (std::string(name) + ".md")).string());
    }

    for (const AggregateStats& a : aggregates) {
        std::printf("%s m%02d %g kW: infeasible %.2f%%, less %.2f%%, "
                    "desired %.2f%%, unresolved %.2f%%\n",
                    a.transformer_id.c_str(), a.month, a.charger_power_kw,
                    a.pct_infeasible, a.pct_less, a.pct_desired,
                    a.pct_unresolved);
    }
    return kExitOk;
}

int cmd_build_pmf(const std::string& trips_path, const std::string& out_path,
                  const std::string& tag) {
    auto trips = load_trips_csv(trips_path);
    TripValidationSummary summary;
    JointCommutePmf pmf = build_commute_pmf(trips, tag, &summary);
    save_pmf_json(pmf, out_path);
    std::printf("accepted %zu trips, rejected %zu (overnight %zu, weight %zu, "
                "hour %zu)\n",
                summary.accepted, summary.rejected(), summary.rejected_overnight,
                summary.rejected_bad_weight, summary.rejected_bad_hour);
    return kExitOk;
}

int cmd_synth_profiles(bool demo, const std::string& archetype, double capacity,
                       int customers, const std::string& transformer_id,
                       int month, int days, std::uint64_t seed,
                       const std::string& out_path,
                       const std::string& metadata_path) {
    if (demo) {
        std::vector<Transformer> feeder = make_demo_feeder(seed, days);
        write_ami_csv(feeder, out_path);
        if (!metadata_path.empty()) write_metadata_csv(feeder, metadata_path);
        std::printf("wrote %zu transformers x %d days x 2 months to %s\n",
                    feeder.size(), days, out_path.c_str());
        return kExitOk;
    }
    Transformer tr;
    tr.id = transformer_id;
    tr.capacity_kw = capacity;
    tr.customer_count = customers;
    for (int day = 1; day <= days; ++day) {
        SynthProfileSpec spec;
        spec.archetype = archetype_from_string(archetype);
        spec.capacity_kw = capacity;
        spec.customer_count = customers;
        spec.seed = seed_combine(seed, static_cast<std::uint64_t>(day));
        require(month >= 1 && month <= 12, "synth-profiles: month out of range");
        require(days >= 1 && days <= 28, "synth-profiles: days must be in [1, 28]");
        char date[32];
        std::snprintf(date, sizeof date, "2024-%02d-%02d", month, day);
        tr.profiles.push_back(synth_profile(spec, tr.id, date));
    }
    tr.validate();
    std::vector<Transformer> one{tr};
    write_ami_csv(one, out_path);
    if (!metadata_path.empty()) write_metadata_csv(one, metadata_path);
    std::printf("wrote %d %s day(s) for %s to %s\n", days, archetype.c_str(),
                transformer_id.c_str(), out_path.c_str());
    return kExitOk;
}

int cmd_report(const std::string& records_path, const std::string& metadata_path,
               const std::string& out_dir, const std::string& format) {
    std::vector<EvaluationRecord> records = load_records_csv(records_path);
    require(!records.empty(), "report: no records in " + records_path);
    std::map<std::string, int> customers = load_customer_counts(metadata_path);
    std::vector<AggregateStats> aggregates = aggregate(records, customers);

    fs::create_directories(out_dir);
    std::set<int> months;
    for (const AggregateStats& a : aggregates) months.insert(a.month);
    for (int month : months) {
        std::vector<AggregateStats> month_rows;
        for (const AggregateStats& a : aggregates) {
            if (a.month == month) month_rows.push_back(a);
        }
        char name[32];
        std::snprintf(name, sizeof name, "report_m%02d", month);
        if (format == "csv" || format == "both") {
            write_report(month_rows, ReportFormat::Csv,
                         (fs::path(out_dir) / (std::string(name) + ".csv")).string());
        }
        if (format == "markdown" || format == "both") {
            write_report(month_rows, ReportFormat::Markdown,
                         (fs::path(out_dir) / (std::string(name) + ".md")).string());
        }
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Residential EV charging coordination and transformer "
                 "hosting-capacity evaluation"};
    app.require_subcommand(1);

    // coordinate
    std::string scenario_path;
    std::string out_dir = "out";
    auto* coordinate = app.add_subcommand(
        "coordinate", "Solve one charging-coordination scenario");
    coordinate->add_option("scenario", scenario_path, "Scenario JSON file")
        ->required();
    coordinate->add_option("--out", out_dir, "Output directory");

    // evaluate-feeder
    std::string config_path;
    RunConfig cfg;
    auto* evaluate = app.add_subcommand(
        "evaluate-feeder", "Monte Carlo hosting-capacity campaign");
    evaluate->add_option("--config", config_path, "Run configuration JSON");
    auto* ami_opt = evaluate->add_option("--ami", cfg.ami_csv, "AMI CSV");
    auto* meta_opt =
        evaluate->add_option("--metadata", cfg.metadata_csv, "Metadata CSV");
    auto* trips_opt = evaluate->add_option("--trips", cfg.trips_csv, "Trip CSV");
    auto* pmf_opt = evaluate->add_option("--pmf", cfg.pmf_json, "PMF JSON");
    auto* tariff_opt =
        evaluate->add_option("--tariff", cfg.tariff_json, "Tariff JSON");
    auto* months_opt =
        evaluate->add_option("--months", cfg.months, "Months to evaluate");
    auto* powers_opt =
        evaluate->add_option("--powers", cfg.powers_kw, "Charging powers (kW)");
    auto* scen_opt = evaluate->add_option("--scenarios", cfg.n_scenarios,
                                          "Scenarios per cell");
    auto* seed_opt =
        evaluate->add_option("--seed", cfg.master_seed, "Master seed");
    auto* tl_opt = evaluate->add_option("--time-limit-secs", cfg.time_limit_secs,
                                        "Per-solve time limit");
    auto* threads_opt =
        evaluate->add_option("--threads", cfg.threads, "Worker threads");
    auto* out_opt = evaluate->add_option("--out", cfg.out_dir, "Output directory");

    // build-pmf
    std::string trips_path;
    std::string pmf_out = "pmf.json";
    std::string pmf_tag;
    auto* build_pmf =
        app.add_subcommand("build-pmf", "Build a commute PMF from trip records");
    build_pmf->add_option("trips", trips_path, "Trip CSV file")->required();
    build_pmf->add_option("--out", pmf_out, "Output PMF JSON");
    build_pmf->add_option("--tag", pmf_tag, "Demographic tag");

    // synth-profiles
    bool synth_demo = false;
    std::string synth_archetype = "july_like";
    double synth_capacity = 50.0;
    int synth_customers = 6;
    std::string synth_id = "T01";
    int synth_month = 7;
    int synth_days = 10;
    std::uint64_t synth_seed = 1;
    std::string synth_out = "ami.csv";
    std::string synth_meta;
    auto* synth = app.add_subcommand("synth-profiles",
                                     "Generate synthetic AMI-like profiles");
    synth->add_flag("--demo", synth_demo,
                    "Emit the bundled six-transformer demo feeder");
    synth->add_option("--archetype", synth_archetype, "july_like or march_like");
    synth->add_option("--capacity", synth_capacity, "Transformer capacity (kW)");
    synth->add_option("--customers", synth_customers, "Household count");
    synth->add_option("--transformer-id", synth_id, "Transformer id");
    synth->add_option("--month", synth_month, "Calendar month");
    synth->add_option("--days", synth_days, "Days to generate");
    synth->add_option("--seed", synth_seed, "Seed");
    synth->add_option("--out", synth_out, "Output AMI CSV");
    synth->add_option("--metadata", synth_meta, "Also write a metadata CSV");

    // report
    std::string report_records;
    std::string report_meta;
    std::string report_out = "out";
    std::string report_format = "both";
    auto* report = app.add_subcommand(
        "report", "Render hosting-capacity tables from saved records");
    report->add_option("--records", report_records, "records.csv")->required();
    report->add_option("--metadata", report_meta, "Metadata CSV")->required();
    report->add_option("--out", report_out, "Output directory");
    report->add_option("--format", report_format, "csv, markdown, or both");

    CLI11_PARSE(app, argc, argv);

    try {
        if (coordinate->parsed()) {
            return cmd_coordinate(scenario_path, out_dir);
        }
        if (evaluate->parsed()) {
            // Start from the config file when given, then let explicit
            // flags override individual fields.
            RunConfig base =
                config_path.empty() ? cfg : load_run_config(config_path);
            if (ami_opt->count() > 0) base.ami_csv = cfg.ami_csv;
            if (meta_opt->count() > 0) base.metadata_csv = cfg.metadata_csv;
            if (trips_opt->count() > 0) base.trips_csv = cfg.trips_csv;
            if (pmf_opt->count() > 0) base.pmf_json = cfg.pmf_json;
            if (tariff_opt->count() > 0) base.tariff_json = cfg.tariff_json;
            if (months_opt->count() > 0) base.months = cfg.months;
            if (powers_opt->count() > 0) base.powers_kw = cfg.powers_kw;
            if (scen_opt->count() > 0) base.n_scenarios = cfg.n_scenarios;
            if (seed_opt->count() > 0) base.master_seed = cfg.master_seed;
            if (tl_opt->count() > 0) base.time_limit_secs = cfg.time_limit_secs;
            if (threads_opt->count() > 0) base.threads = cfg.threads;
            if (out_opt->count() > 0) base.out_dir = cfg.out_dir;
            return cmd_evaluate_feeder(base);
        }
        if (build_pmf->parsed()) {
            return cmd_build_pmf(trips_path, pmf_out, pmf_tag);
        }
        if (synth->parsed()) {
            return cmd_synth_profiles(synth_demo, synth_archetype, synth_capacity,
                                      synth_customers, synth_id, synth_month,
                                      synth_days, synth_seed, synth_out,
                                      synth_meta);
        }
        if (report->parsed()) {
            return cmd_report(report_records, report_meta, report_out,
                              report_format);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
