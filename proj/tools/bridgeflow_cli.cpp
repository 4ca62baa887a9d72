// Command line front end for the bridgeflow shared library. Talks to the
// library exclusively through the public C interface.

#include <bridgeflow/bridgeflow.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

namespace {

using nlohmann::json;

std::string fmt(double value, bool round_whole) {
    if (std::isnan(value)) return "nan";
    if (value == 0.0) value = 0.0;
    char buf[64];
    if (round_whole) {
        auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), std::llround(value));
        return ec == std::errc() ? std::string(buf, ptr) : std::string("?");
    }
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return ec == std::errc() ? std::string(buf, ptr) : std::string("?");
}

[[noreturn]] void die(bf_status status, const std::string& context) {
    std::cerr << "error: " << bf_status_name(status);
    const char* detail = bf_last_error_message();
    if (detail && *detail) std::cerr << ": " << detail;
    if (!context.empty()) std::cerr << " (" << context << ")";
    std::cerr << "\n";
    std::exit(1);
}

void check(bf_status status, const std::string& context) {
    if (status != BF_OK) die(status, context);
}

// Keys mirrored between the JSON config file and bf_sim_config_set/get.
const char* const kConfigKeys[] = {
    "min_weight_seed",    "max_weight_seed",    "delta",
    "max_bridge_stretch", "min_network_weight_trim", "max_network_weight_trim",
    "min_bridge_capacity", "max_bridge_capacity", "min_current_amount",
    "max_current_amount", "n_assets_p",         "n_assets_q",
    "n_scenarios",        "rng_seed",           "asset_availability_prob"};

struct BandSpec {
    std::string id;
    double min = 0.0;
    double ideal = 0.0;
    double max = 0.0;
    bool on_p = true;
    bool on_q = true;
};

std::vector<BandSpec> load_bands_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: IoError: could not open '" << path << "'\n";
        std::exit(1);
    }
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        std::cerr << "error: ParseError: bands file is not valid JSON: " << e.what() << "\n";
        std::exit(1);
    }
    if (!doc.is_array()) {
        std::cerr << "error: ParseError: bands file root must be an array\n";
        std::exit(1);
    }
    std::vector<BandSpec> bands;
    for (const auto& item : doc) {
        if (!item.is_object()) {
            std::cerr << "error: ParseError: band entries must be objects\n";
            std::exit(1);
        }
        BandSpec band;
        bool saw_min = false, saw_ideal = false, saw_max = false;
        for (const auto& [key, value] : item.items()) {
            auto number = [&](const char* name) {
                if (!value.is_number()) {
                    std::cerr << "error: ParseError: band key '" << name
                              << "' must be a number\n";
                    std::exit(1);
                }
                return value.get<double>();
            };
            if (key == "id") {
                if (!value.is_string()) {
                    std::cerr << "error: ParseError: band 'id' must be a string\n";
                    std::exit(1);
                }
                band.id = value.get<std::string>();
            } else if (key == "min") { band.min = number("min"); saw_min = true; }
            else if (key == "ideal") { band.ideal = number("ideal"); saw_ideal = true; }
            else if (key == "max") { band.max = number("max"); saw_max = true; }
            else if (key == "on_p") {
                if (!value.is_boolean()) {
                    std::cerr << "error: ParseError: band 'on_p' must be a boolean\n";
                    std::exit(1);
                }
                band.on_p = value.get<bool>();
            } else if (key == "on_q") {
                if (!value.is_boolean()) {
                    std::cerr << "error: ParseError: band 'on_q' must be a boolean\n";
                    std::exit(1);
                }
                band.on_q = value.get<bool>();
            } else {
                std::cerr << "error: ParseError: unknown band key '" << key << "'\n";
                std::exit(1);
            }
        }
        if (!saw_min || !saw_ideal || !saw_max) {
            std::cerr << "error: ParseError: band entries need min, ideal and max\n";
            std::exit(1);
        }
        if (band.id.empty()) band.id = "asset_" + std::to_string(bands.size() + 1);
        bands.push_back(std::move(band));
    }
    if (bands.empty()) {
        std::cerr << "error: ParseError: bands file lists no assets\n";
        std::exit(1);
    }
    return bands;
}

int run_simulate(const std::string& config_path, bool seed_set, std::uint64_t seed,
                 bool scenarios_set, int scenarios, const std::string& out_dir,
                 bool round_whole) {
    struct ConfigDeleter {
        void operator()(bf_sim_config* c) const { bf_sim_config_free(c); }
    };
    std::unique_ptr<bf_sim_config, ConfigDeleter> config(bf_sim_config_new());
    if (!config) die(BF_UNKNOWN_ERROR, "allocating config");

    if (!config_path.empty())
        check(bf_sim_config_load_file(config.get(), config_path.c_str()), config_path);
    if (seed_set)
        check(bf_sim_config_set(config.get(), "rng_seed", static_cast<double>(seed)),
              "rng_seed");
    if (scenarios_set)
        check(bf_sim_config_set(config.get(), "n_scenarios", scenarios), "n_scenarios");

    std::cout << "configuration:\n";
    double n_scenarios_value = 0;
    for (const char* key : kConfigKeys) {
        double value = 0;
        check(bf_sim_config_get(config.get(), key, &value), key);
        if (std::string(key) == "n_scenarios") n_scenarios_value = value;
        std::cout << "  " << key << " = " << fmt(value, false) << "\n";
    }

    bf_batch* batch_raw = nullptr;
    check(bf_simulate(config.get(), &batch_raw), "running batch");
    struct BatchDeleter {
        void operator()(bf_batch* b) const { bf_batch_free(b); }
    };
    std::unique_ptr<bf_batch, BatchDeleter> batch(batch_raw);

    std::filesystem::path dir(out_dir.empty() ? "." : out_dir);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
        std::cerr << "error: IoError: could not create '" << dir.string() << "'\n";
        return 1;
    }

    const std::pair<bf_table_kind, const char*> table_files[] = {
        {BF_TABLE_INPUTS, "inputs.csv"},
        {BF_TABLE_TRANSFERS, "transfers.csv"},
        {BF_TABLE_INTERMEDIATES, "intermediates.csv"},
    };
    for (const auto& [kind, name] : table_files) {
        std::filesystem::path path = dir / name;
        check(bf_batch_write_csv(batch.get(), kind, path.string().c_str(),
                                 round_whole ? 1 : 0),
              path.string());
    }

    size_t rows = bf_batch_rows(batch.get());
    size_t flagged = 0;
    size_t nonzero = 0;
    double max_abs = 0.0;
    for (size_t row = 0; row < rows; ++row) {
        if (bf_batch_row_status(batch.get(), row) != BF_OK) {
            ++flagged;
            continue;
        }
        double delta_pq = 0;
        check(bf_batch_cell(batch.get(), BF_TABLE_TRANSFERS, row, 0, &delta_pq), "cell");
        if (delta_pq != 0.0) ++nonzero;
        max_abs = std::max(max_abs, std::fabs(delta_pq));
    }

    size_t sampled = static_cast<size_t>(n_scenarios_value);
    size_t designed = rows >= sampled ? rows - sampled : 0;
    std::cout << "wrote " << (dir / "inputs.csv").string() << ", "
              << (dir / "transfers.csv").string() << ", "
              << (dir / "intermediates.csv").string() << "\n";
    std::cout << "rows: " << rows << " (" << designed << " designed + " << sampled
              << " sampled), flagged: " << flagged << "\n";
    std::cout << "nonzero transfers: " << nonzero
              << ", max |transfer|: " << fmt(max_abs, round_whole) << "\n";
    return 0;
}

int run_transfer(double curr_p, double tbd_p, double curr_q, double tbd_q,
                 double cap_pq, double cap_qp, const std::string& bands_file,
                 const std::vector<double>& inline_band, double trim_min,
                 double trim_max, bool max_stretch_set, double max_stretch,
                 bool delta_set, double delta, const std::string& format,
                 bool round_whole) {
    struct ScenarioDeleter {
        void operator()(bf_scenario* s) const { bf_scenario_free(s); }
    };
    std::unique_ptr<bf_scenario, ScenarioDeleter> scenario(bf_scenario_new());
    if (!scenario) die(BF_UNKNOWN_ERROR, "allocating scenario");

    check(bf_scenario_set_network_p(scenario.get(), curr_p, tbd_p), "network P");
    check(bf_scenario_set_network_q(scenario.get(), curr_q, tbd_q), "network Q");
    check(bf_scenario_set_bridge(scenario.get(), cap_pq, cap_qp), "bridge");
    check(bf_scenario_set_trim(scenario.get(), trim_min, trim_max), "trim");
    if (max_stretch_set)
        check(bf_scenario_set_max_stretch(scenario.get(), max_stretch), "max stretch");
    if (delta_set) check(bf_scenario_set_delta(scenario.get(), delta), "delta");

    if (!bands_file.empty()) {
        for (const BandSpec& band : load_bands_file(bands_file)) {
            check(bf_scenario_add_asset(scenario.get(), band.id.c_str(), band.min,
                                        band.ideal, band.max, band.on_p ? 1 : 0,
                                        band.on_q ? 1 : 0),
                  band.id);
        }
    } else {
        check(bf_scenario_add_asset(scenario.get(), "asset_1", inline_band[0],
                                    inline_band[1], inline_band[2], 1, 1),
              "inline band");
    }

    bf_result* result_raw = nullptr;
    check(bf_scenario_run(scenario.get(), &result_raw), "running scenario");
    struct ResultDeleter {
        void operator()(bf_result* r) const { bf_result_free(r); }
    };
    std::unique_ptr<bf_result, ResultDeleter> result(result_raw);

    auto get = [&](bf_field field) {
        double value = 0;
        check(bf_result_get(result.get(), field, &value), "result field");
        return value;
    };

    if (format == "csv") {
        // Same layout as one row of the batch transfers table.
        const std::pair<const char*, bf_field> columns[] = {
            {"TransferAmount_PQ_Delta", BF_FIELD_DELTA_PQ},
            {"TransferAmount_QP_Delta", BF_FIELD_DELTA_QP},
            {"TransferAmount_PQ", BF_FIELD_SIMPLE_PQ},
            {"TransferAmount_QP", BF_FIELD_SIMPLE_QP},
            {"BridgeStretch", BF_FIELD_RAW_STRETCH},
            {"collectDeployDiff", BF_FIELD_COLLECT_DEPLOY_DIFF},
            {"outsideBand_P", BF_FIELD_OUTSIDE_BAND_P},
            {"outsideBand_Q", BF_FIELD_OUTSIDE_BAND_Q},
            {"maxSend_P", BF_FIELD_MAX_SEND_P},
            {"maxSend_Q", BF_FIELD_MAX_SEND_Q},
            {"maxRecieve_P", BF_FIELD_MAX_RECEIVE_P},
            {"maxRecieve_Q", BF_FIELD_MAX_RECEIVE_Q},
        };
        bool first = true;
        for (const auto& [name, field] : columns) {
            std::cout << (first ? "" : ",") << name;
            first = false;
        }
        std::cout << "\n";
        first = true;
        for (const auto& [name, field] : columns) {
            std::cout << (first ? "" : ",") << fmt(get(field), round_whole);
            first = false;
        }
        std::cout << "\n";
        return 0;
    }

    auto line = [&](const char* name, double value) {
        std::cout << name << " = " << fmt(value, round_whole) << "\n";
    };
    line("collectDeployDiff", get(BF_FIELD_COLLECT_DEPLOY_DIFF));
    line("BridgeStretch", get(BF_FIELD_RAW_STRETCH));
    line("cappedStretch", get(BF_FIELD_CAPPED_STRETCH));
    line("TBD+Current_P", get(BF_FIELD_TOTAL_WITH_TBD_P));
    line("TBD+Current_Q", get(BF_FIELD_TOTAL_WITH_TBD_Q));
    line("minCapacity_P", get(BF_FIELD_MIN_CAPACITY_P));
    line("maxCapacity_P", get(BF_FIELD_MAX_CAPACITY_P));
    line("minCapacity_Q", get(BF_FIELD_MIN_CAPACITY_Q));
    line("maxCapacity_Q", get(BF_FIELD_MAX_CAPACITY_Q));
    line("outsideBand_P", get(BF_FIELD_OUTSIDE_BAND_P));
    line("outsideBand_Q", get(BF_FIELD_OUTSIDE_BAND_Q));
    line("maxSend_P", get(BF_FIELD_MAX_SEND_P));
    line("maxSend_Q", get(BF_FIELD_MAX_SEND_Q));
    line("maxRecieve_P", get(BF_FIELD_MAX_RECEIVE_P));
    line("maxRecieve_Q", get(BF_FIELD_MAX_RECEIVE_Q));
    line("TransferAmount_PQ", get(BF_FIELD_SIMPLE_PQ));
    line("TransferAmount_QP", get(BF_FIELD_SIMPLE_QP));
    line("TransferAmount_PQ_Delta", get(BF_FIELD_DELTA_PQ));
    line("TransferAmount_QP_Delta", get(BF_FIELD_DELTA_QP));
    line("nettedTransfer_PQ", get(BF_FIELD_NETTED));
    std::cout << "multiRound = " << (bf_result_multi_round(result.get()) ? "yes" : "no")
              << "\n";
    std::cout << "bandsInfeasible = "
              << (bf_result_bands_infeasible(result.get()) ? "yes" : "no") << "\n";
    return 0;
}

int run_route(const std::string& file, const std::string& format, bool round_whole) {
    struct ProblemDeleter {
        void operator()(bf_route_problem* p) const { bf_route_problem_free(p); }
    };
    std::unique_ptr<bf_route_problem, ProblemDeleter> problem(bf_route_problem_new());
    if (!problem) die(BF_UNKNOWN_ERROR, "allocating route problem");
    check(bf_route_problem_load_file(problem.get(), file.c_str()), file);

    bf_route_result* result_raw = nullptr;
    check(bf_route_run(problem.get(), &result_raw), "running route");
    struct ResultDeleter {
        void operator()(bf_route_result* r) const { bf_route_result_free(r); }
    };
    std::unique_ptr<bf_route_result, ResultDeleter> result(result_raw);

    size_t transfers = bf_route_transfer_count(result.get());
    size_t residuals = bf_route_residual_count(result.get());

    if (format == "csv") {
        std::cout << "from,to,amount\n";
        for (size_t i = 0; i < transfers; ++i) {
            const char* from = nullptr;
            const char* to = nullptr;
            double amount = 0;
            check(bf_route_transfer(result.get(), i, &from, &to, &amount), "transfer");
            std::cout << from << "," << to << "," << fmt(amount, round_whole) << "\n";
        }
        return 0;
    }

    std::cout << "transfers: " << transfers << "\n";
    for (size_t i = 0; i < transfers; ++i) {
        const char* from = nullptr;
        const char* to = nullptr;
        double amount = 0;
        check(bf_route_transfer(result.get(), i, &from, &to, &amount), "transfer");
        std::cout << "  " << from << " -> " << to << "  " << fmt(amount, round_whole)
                  << "\n";
    }
    std::cout << "residuals:\n";
    for (size_t i = 0; i < residuals; ++i) {
        const char* id = nullptr;
        double outside = 0;
        check(bf_route_residual(result.get(), i, &id, &outside), "residual");
        std::cout << "  " << id << "  " << fmt(outside, round_whole) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cross-network rebalancing transfers and batch simulation"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(bf_version()));

    // simulate
    auto* simulate = app.add_subcommand("simulate", "Run a scenario batch and write CSVs");
    std::string config_path;
    std::uint64_t seed = 0;
    int scenarios = 0;
    std::string out_dir = ".";
    bool sim_round = false;
    simulate->add_option("--config", config_path, "JSON config file");
    auto* seed_opt = simulate->add_option("--seed", seed, "Override rng_seed");
    auto* scen_opt = simulate->add_option("--scenarios", scenarios,
                                          "Override n_scenarios (sampled rows)");
    simulate->add_option("--out", out_dir, "Output directory (default .)");
    simulate->add_flag("--round", sim_round, "Round CSV cells to whole USD");

    // transfer
    auto* transfer = app.add_subcommand("transfer", "Compute transfers for one scenario");
    double curr_p = 0, tbd_p = 0, curr_q = 0, tbd_q = 0, cap_pq = 0, cap_qp = 0;
    transfer->add_option("--curr-p", curr_p, "Invested USD on P")->required();
    transfer->add_option("--tbd-p", tbd_p, "Pending flow on P (deposits +, withdrawals -)")
        ->required();
    transfer->add_option("--curr-q", curr_q, "Invested USD on Q")->required();
    transfer->add_option("--tbd-q", tbd_q, "Pending flow on Q")->required();
    transfer->add_option("--cap-pq", cap_pq, "Bridge capacity P to Q")->required();
    transfer->add_option("--cap-qp", cap_qp, "Bridge capacity Q to P")->required();
    std::string bands_file;
    std::vector<double> inline_band;
    auto* bands_opt = transfer->add_option("--bands-file", bands_file,
                                           "JSON array of asset weight bands");
    auto* band_opt = transfer->add_option("--band", inline_band,
                                          "Single dual-network band: MIN IDEAL MAX")
                         ->expected(3);
    band_opt->excludes(bands_opt);
    double trim_min = 0.0, trim_max = 1.0;
    transfer->add_option("--trim-min", trim_min, "Network share lower clamp (default 0)");
    transfer->add_option("--trim-max", trim_max, "Network share upper clamp (default 1)");
    double max_stretch = 0, delta = 0;
    auto* stretch_opt = transfer->add_option("--max-stretch", max_stretch,
                                             "Band stretch cap (default 0.2)");
    auto* delta_opt = transfer->add_option("--delta", delta,
                                           "Indicator softening (default 0.0001)");
    std::string transfer_format = "plain";
    transfer->add_option("--format", transfer_format, "plain or csv")
        ->check(CLI::IsMember({"plain", "csv"}));
    bool transfer_round = false;
    transfer->add_flag("--round", transfer_round, "Round printed values to whole USD");

    // route
    auto* route = app.add_subcommand("route", "Round-robin routing across networks");
    std::string route_file;
    route->add_option("--file", route_file, "JSON route problem")->required();
    std::string route_format = "plain";
    route->add_option("--format", route_format, "plain or csv")
        ->check(CLI::IsMember({"plain", "csv"}));
    bool route_round = false;
    route->add_flag("--round", route_round, "Round printed values to whole USD");

    CLI11_PARSE(app, argc, argv);

    if (simulate->parsed()) {
        return run_simulate(config_path, !seed_opt->empty(), seed, !scen_opt->empty(),
                            scenarios, out_dir, sim_round);
    }
    if (transfer->parsed()) {
        if (bands_file.empty() && inline_band.size() != 3) {
            std::cerr << "error: InvalidArgument: provide --bands-file or --band\n";
            return 1;
        }
        return run_transfer(curr_p, tbd_p, curr_q, tbd_q, cap_pq, cap_qp, bands_file,
                            inline_band, trim_min, trim_max, !stretch_opt->empty(),
                            max_stretch, !delta_opt->empty(), delta, transfer_format,
                            transfer_round);
    }
    if (route->parsed()) {
        return run_route(route_file, route_format, route_round);
    }
    return 0;
}
