#include "simulate.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <ostream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "error.hpp"

namespace bridgeflow {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Independent stream per (seed, index, attempt) without sequential warm-up.
std::uint64_t scenario_seed(std::uint64_t seed, std::uint64_t index, std::uint64_t attempt) {
    std::uint64_t s = splitmix64(seed);
    s = splitmix64(s ^ (index + 1) * 0x9e3779b97f4a7c15ULL);
    return splitmix64(s ^ (attempt + 1) * 0xbf58476d1ce4e5b9ULL);
}

double draw(std::mt19937_64& rng, double lo, double hi) {
    if (!(lo <= hi)) fail(errc::invalid_argument, "empty sampling interval");
    std::uniform_real_distribution<double> dist(lo, hi);
    return dist(rng);
}

PipelineAsset make_asset(std::string id, double min, double ideal, double max,
                         bool on_p, bool on_q) {
    PipelineAsset a;
    a.id = std::move(id);
    a.band.raw_min = min;
    a.band.raw_ideal = ideal;
    a.band.raw_max = max;
    a.on_p = on_p;
    a.on_q = on_q;
    return a;
}

RebalanceScenario make_designed(std::string name, double curr_p, double tbd_p,
                                double curr_q, double tbd_q, double cap_pq, double cap_qp,
                                std::vector<PipelineAsset> assets) {
    RebalanceScenario s;
    s.p = NetworkState{"P", curr_p, tbd_p, {}};
    s.q = NetworkState{"Q", curr_q, tbd_q, {}};
    s.bridge = BridgeLink{cap_pq, cap_qp};
    s.assets = std::move(assets);
    double lo = s.assets.front().band.raw_min;
    double hi = s.assets.front().band.raw_max;
    for (const auto& a : s.assets) {
        lo = std::min(lo, a.band.raw_min);
        hi = std::max(hi, a.band.raw_max);
    }
    s.min_global_weight = lo;
    s.max_global_weight = hi;
    s.provenance.designed = true;
    s.provenance.name = std::move(name);
    return s;
}

}  // namespace

std::vector<RebalanceScenario> designed_scenarios() {
    std::vector<RebalanceScenario> out;

    // 1. No pending flows, both networks inside band: everything zero.
    out.push_back(make_designed("all_zero_flows", 50000, 0, 50000, 0, 10000, 10000,
                                {make_asset("a1", 0.45, 0.50, 0.55, true, true),
                                 make_asset("a2", 0.40, 0.50, 0.60, true, true)}));

    // 2. Deposit on P only; stretch cap binds at 0.2 but both stay inside.
    out.push_back(make_designed("deposit_only_p", 40000, 20000, 40000, 0, 5000, 5000,
                                {make_asset("a1", 0.10, 0.25, 0.40, true, true),
                                 make_asset("a2", 0.10, 0.25, 0.40, true, true),
                                 make_asset("a3", 0.10, 0.25, 0.40, true, true),
                                 make_asset("a4", 0.10, 0.25, 0.40, true, true)}));

    // 3. Mirror of 2 with the deposit on Q.
    out.push_back(make_designed("deposit_only_q", 40000, 0, 40000, 20000, 5000, 5000,
                                {make_asset("a1", 0.10, 0.25, 0.40, true, true),
                                 make_asset("a2", 0.10, 0.25, 0.40, true, true),
                                 make_asset("a3", 0.10, 0.25, 0.40, true, true),
                                 make_asset("a4", 0.10, 0.25, 0.40, true, true)}));

    // 4. Withdrawal small enough that both networks stay inside band.
    out.push_back(make_designed("withdrawal_within_band", 50000, -10000, 50000, 0,
                                20000, 20000,
                                {make_asset("a1", 0.45, 0.50, 0.55, true, true),
                                 make_asset("a2", 0.40, 0.50, 0.60, true, true)}));

    // 5. Redemption larger than the bridge can carry in one pass: the cap
    // binds at 12000 and 8000 of need is left for another round.
    out.push_back(make_designed("withdrawal_multi_round", 40000, 0, 30000, -50000,
                                12000, 12000,
                                {make_asset("a1", 0.30, 0.50, 0.70, true, true)}));

    // 6. Same shortfall with both bridge directions shut: nothing moves.
    out.push_back(make_designed("zero_capacity", 40000, 0, 30000, -50000, 0, 0,
                                {make_asset("a1", 0.30, 0.50, 0.70, true, true)}));

    // 7. Asymmetric capacities; the tight PQ direction is the binding one.
    out.push_back(make_designed("asymmetric_capacity", 60000, 0, 30000, -40000,
                                5000, 25000,
                                {make_asset("a1", 0.30, 0.50, 0.70, true, true)}));

    // 8. Receiver need exactly equals capacity: transfer lands on the cap.
    out.push_back(make_designed("capacity_exact_bind", 60000, 0, 30000, -40000,
                                10000, 10000,
                                {make_asset("a1", 0.30, 0.50, 0.70, true, true)}));

    // 9. Withdrawal equal to total investment (validation boundary). Assets
    // are single-network so shares stay defined at zero totals.
    out.push_back(make_designed("boundary_zero_total", 20000, -20000, 10000, -10000,
                                1000, 1000,
                                {make_asset("a1", 0.50, 0.60, 0.70, true, false),
                                 make_asset("a2", 0.30, 0.40, 0.50, false, true)}));

    // 10. Single-network assets whose weights cannot absorb the holdings:
    // both networks sit above max and nobody can receive.
    out.push_back(make_designed("single_network_concentration", 50000, 0, 50000, 0,
                                10000, 10000,
                                {make_asset("a1", 0.20, 0.25, 0.30, true, false),
                                 make_asset("a2", 0.20, 0.25, 0.30, false, true)}));

    // 11. Raw network weight 1.2 is trimmed to 1; the whole deposit routes
    // toward the overdrawn side.
    out.push_back(make_designed("trim_activation", 50000, 10000, 20000, -30000,
                                20000, 20000,
                                {make_asset("a1", 0.30, 0.50, 0.70, true, true)}));

    // 12. Raw stretch 0.825 capped to 0.2; widened bands still contain both.
    out.push_back(make_designed("stretch_cap_activation", 40000, 20000, 40000, -10000,
                                20000, 20000,
                                {make_asset("a1", 0.45, 0.50, 0.55, true, true),
                                 make_asset("a2", 0.40, 0.50, 0.60, true, true)}));

    // 13. Small uncapped stretch, both inside: a representative no-op.
    out.push_back(make_designed("both_inside_noop", 45000, 6000, 45000, 4000,
                                15000, 15000,
                                {make_asset("a1", 0.45, 0.50, 0.55, true, true),
                                 make_asset("a2", 0.40, 0.50, 0.60, true, true)}));

    // 14. Negative total on P: the simple form leaves the refill at zero, the
    // indicator form sends it. The two formulations disagree by design here.
    out.push_back(make_designed("formulation_divergence", 30000, -40000, 60000, 0,
                                30000, 30000,
                                {make_asset("a1", 0.10, 0.20, 0.35, true, true),
                                 make_asset("a2", 0.10, 0.20, 0.35, true, true),
                                 make_asset("a3", 0.10, 0.20, 0.35, true, true),
                                 make_asset("a4", 0.10, 0.20, 0.35, true, true),
                                 make_asset("a5", 0.10, 0.20, 0.35, true, true)}));

    // 15. Equal deploy ratios on both sides: the difference is exactly zero.
    out.push_back(make_designed("equal_ratio_zero_diff", 40000, 8000, 60000, 12000,
                                10000, 10000,
                                {make_asset("a1", 0.45, 0.50, 0.55, true, true),
                                 make_asset("a2", 0.40, 0.50, 0.60, true, true)}));

    return out;
}

RebalanceScenario sample_scenario(const SimulationParams& params, std::uint64_t index) {
    if (!(params.min_weight_seed >= 0) || !(params.max_weight_seed >= params.min_weight_seed))
        fail(errc::invalid_argument, "weight seed interval is invalid");
    if (params.min_bridge_capacity < 0 || params.max_bridge_capacity < params.min_bridge_capacity)
        fail(errc::invalid_argument, "bridge capacity interval is invalid");
    if (params.min_current_amount < 0 || params.max_current_amount < params.min_current_amount)
        fail(errc::invalid_argument, "current amount interval is invalid");
    if (params.n_assets_p < 1 || params.n_assets_q < 1)
        fail(errc::invalid_argument, "each network needs at least one asset");
    if (!(params.asset_availability_prob >= 0) || params.asset_availability_prob > 1)
        fail(errc::invalid_argument, "availability probability must be in [0, 1]");

    constexpr int max_attempts = 16;
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        std::mt19937_64 rng(scenario_seed(params.rng_seed, index,
                                          static_cast<std::uint64_t>(attempt)));

        // Fixed draw order; changing it would silently change every batch.
        double min_w = draw(rng, params.min_weight_seed, params.max_weight_seed);
        double max_w = draw(rng, min_w, params.max_weight_seed);
        double cap_pq = draw(rng, params.min_bridge_capacity, params.max_bridge_capacity);
        double cap_qp = draw(rng, params.min_bridge_capacity, params.max_bridge_capacity);
        double curr_p = draw(rng, params.min_current_amount, params.max_current_amount);
        double curr_q = draw(rng, params.min_current_amount, params.max_current_amount);
        double sum = curr_p + curr_q;
        double tbd_p = draw(rng, -sum, params.max_current_amount);
        // Lower bound keeps the combined withdrawal within total investment.
        double tbd_q = draw(rng, -sum + std::max(-tbd_p, 0.0), params.max_current_amount);

        // The deploy ratio needs a nonzero denominator when flow is pending.
        if ((curr_p == 0 && tbd_p != 0) || (curr_q == 0 && tbd_q != 0)) continue;

        RebalanceScenario s;
        s.p = NetworkState{"P", curr_p, tbd_p, {}};
        s.q = NetworkState{"Q", curr_q, tbd_q, {}};
        s.bridge = BridgeLink{cap_pq, cap_qp};
        s.min_global_weight = min_w;
        s.max_global_weight = max_w;
        s.provenance.designed = false;
        s.provenance.index = index;

        double ideal = (min_w + max_w) / 2.0;
        int universe = std::max(params.n_assets_p, params.n_assets_q);
        std::bernoulli_distribution coin(params.asset_availability_prob);
        bool any_p = false;
        bool any_q = false;
        for (int i = 0; i < universe; ++i) {
            bool on_p = i < params.n_assets_p;
            bool on_q = i < params.n_assets_q;
            if (params.asset_availability_prob < 1.0) {
                if (on_p) on_p = coin(rng);
                if (on_q) on_q = coin(rng);
            }
            if (!on_p && !on_q) continue;
            any_p = any_p || on_p;
            any_q = any_q || on_q;
            s.assets.push_back(make_asset("asset_" + std::to_string(i + 1),
                                          min_w, ideal, max_w, on_p, on_q));
        }
        // Every network must hold something; pin one asset back if thinning
        // emptied a side.
        if (!any_p) {
            if (s.assets.empty())
                s.assets.push_back(make_asset("asset_1", min_w, ideal, max_w, true, false));
            else
                s.assets.front().on_p = true;
        }
        if (!any_q) {
            if (s.assets.empty())
                s.assets.push_back(make_asset("asset_1", min_w, ideal, max_w, false, true));
            else
                s.assets.back().on_q = true;
        }
        return s;
    }
    fail(errc::undefined_ratio, "could not sample a scenario with defined deploy ratios");
}

BatchResult run_batch(const SimulationParams& params) {
    BatchResult batch;
    batch.params = params;

    std::vector<RebalanceScenario> scenarios = designed_scenarios();
    for (int i = 0; i < params.n_scenarios; ++i)
        scenarios.push_back(sample_scenario(params, static_cast<std::uint64_t>(i)));

    for (auto& scenario : scenarios) {
        BatchRow row;
        row.scenario = std::move(scenario);
        try {
            PipelineInput input;
            input.p = row.scenario.p;
            input.q = row.scenario.q;
            input.bridge = row.scenario.bridge;
            input.assets = row.scenario.assets;
            input.trim = params.trim();
            input.max_stretch = params.max_bridge_stretch;
            input.delta = params.delta;
            row.result = run_pipeline(input);
        } catch (const Error& e) {
            row.status = e.code();
        }
        batch.rows.push_back(std::move(row));
    }
    return batch;
}

namespace {

constexpr double nan_cell = std::numeric_limits<double>::quiet_NaN();

}  // namespace

Table make_table(const BatchResult& batch, TableKind kind) {
    Table t;
    switch (kind) {
        case TableKind::inputs:
            t.name = "inputs";
            t.columns = {"minGlobalWeight", "maxGlobalWeight", "BridgeCapacity_PQ",
                         "BridgeCapacity_QP", "TBDAmount_P", "CurrentAmount_P",
                         "TBDAmount_Q", "CurrentAmount_Q"};
            break;
        case TableKind::transfers:
            t.name = "transfers";
            t.columns = {"TransferAmount_PQ_Delta", "TransferAmount_QP_Delta",
                         "TransferAmount_PQ", "TransferAmount_QP", "BridgeStretch",
                         "collectDeployDiff", "outsideBand_P", "outsideBand_Q",
                         "maxSend_P", "maxSend_Q", "maxRecieve_P", "maxRecieve_Q"};
            break;
        case TableKind::intermediates:
            t.name = "intermediates";
            t.columns = {"TBD+Current_P", "TBD+Current_Q", "outsideBand_PQ_D",
                         "outsideBand_QP_D", "outsideBand_Positive_P",
                         "outsideBand_Positive_Q", "transfer_PQ_First_D",
                         "transfer_PQ_First", "transfer_PQ_Second",
                         "transfer_QP_First_D", "transfer_QP_First",
                         "transfer_QP_Second", "Total-MinCapacity_P",
                         "Total-MaxCapacity_P", "Total-MinCapacity_Q",
                         "Total-MaxCapacity_Q"};
            break;
    }

    for (const auto& row : batch.rows) {
        const auto& s = row.scenario;
        std::vector<double> cells;
        if (kind == TableKind::inputs) {
            cells = {s.min_global_weight, s.max_global_weight, s.bridge.capacity_pq,
                     s.bridge.capacity_qp, s.p.tbd, s.p.current_total, s.q.tbd,
                     s.q.current_total};
        } else if (!row.result) {
            cells.assign(t.columns.size(), nan_cell);
        } else if (kind == TableKind::transfers) {
            const auto& r = *row.result;
            cells = {r.decision.delta_pq, r.decision.delta_qp, r.decision.simple_pq,
                     r.decision.simple_qp, r.stretch.raw_stretch,
                     r.stretch.collect_deploy_diff, r.assess_p.outside_band,
                     r.assess_q.outside_band, r.assess_p.max_send, r.assess_q.max_send,
                     r.assess_p.max_receive, r.assess_q.max_receive};
        } else {
            const auto& r = *row.result;
            cells = {r.total_with_tbd_p,
                     r.total_with_tbd_q,
                     r.outside_compare_pq,
                     r.outside_compare_qp,
                     std::max(r.assess_p.outside_band, 0.0),
                     std::max(r.assess_q.outside_band, 0.0),
                     r.terms.pq_first_delta,
                     r.terms.pq_first_simple,
                     r.terms.pq_second,
                     r.terms.qp_first_delta,
                     r.terms.qp_first_simple,
                     r.terms.qp_second,
                     r.total_with_tbd_p - r.assess_p.min_capacity,
                     r.total_with_tbd_p - r.assess_p.max_capacity,
                     r.total_with_tbd_q - r.assess_q.min_capacity,
                     r.total_with_tbd_q - r.assess_q.max_capacity};
        }
        t.rows.push_back(std::move(cells));
    }
    return t;
}

std::string format_cell(double value, bool round_whole) {
    if (std::isnan(value)) return "nan";
    if (value == 0.0) value = 0.0;  // normalize the sign of zero
    char buf[64];
    if (round_whole) {
        long long whole = std::llround(value);
        auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), whole);
        if (ec != std::errc()) fail(errc::io_error, "cell formatting failed");
        return std::string(buf, ptr);
    }
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    if (ec != std::errc()) fail(errc::io_error, "cell formatting failed");
    return std::string(buf, ptr);
}

void write_csv(const Table& table, std::ostream& out, bool round_whole) {
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        if (c) out << ',';
        out << table.columns[c];
    }
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out << ',';
            out << format_cell(row[c], round_whole);
        }
        out << '\n';
    }
    if (!out) fail(errc::io_error, "could not write CSV stream");
}

namespace {

using nlohmann::json;

[[noreturn]] void bad_config(const std::string& msg) { fail(errc::parse_error, msg); }

double as_number(const json& j, const std::string& key) {
    if (!j.is_number()) bad_config("config key '" + key + "' must be a number");
    return j.get<double>();
}

int as_int(const json& j, const std::string& key) {
    if (!j.is_number_integer()) bad_config("config key '" + key + "' must be an integer");
    return j.get<int>();
}

std::uint64_t as_seed(const json& j, const std::string& key) {
    if (!j.is_number_unsigned() && !j.is_number_integer())
        bad_config("config key '" + key + "' must be an integer");
    if (j.is_number_integer() && j.get<std::int64_t>() < 0)
        bad_config("config key '" + key + "' must be non-negative");
    return j.get<std::uint64_t>();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(errc::io_error, "could not open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) fail(errc::io_error, "could not read '" + path + "'");
    return buf.str();
}

}  // namespace

SimulationParams params_from_json_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        bad_config(std::string("config is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) bad_config("config root must be an object");

    SimulationParams p;
    for (const auto& [key, value] : doc.items()) {
        if (key == "min_weight_seed") p.min_weight_seed = as_number(value, key);
        else if (key == "max_weight_seed") p.max_weight_seed = as_number(value, key);
        else if (key == "delta") p.delta = as_number(value, key);
        else if (key == "max_bridge_stretch") p.max_bridge_stretch = as_number(value, key);
        else if (key == "min_network_weight_trim") p.min_network_weight_trim = as_number(value, key);
        else if (key == "max_network_weight_trim") p.max_network_weight_trim = as_number(value, key);
        else if (key == "min_bridge_capacity") p.min_bridge_capacity = as_number(value, key);
        else if (key == "max_bridge_capacity") p.max_bridge_capacity = as_number(value, key);
        else if (key == "min_current_amount") p.min_current_amount = as_number(value, key);
        else if (key == "max_current_amount") p.max_current_amount = as_number(value, key);
        else if (key == "n_assets_p") p.n_assets_p = as_int(value, key);
        else if (key == "n_assets_q") p.n_assets_q = as_int(value, key);
        else if (key == "n_scenarios") p.n_scenarios = as_int(value, key);
        else if (key == "rng_seed") p.rng_seed = as_seed(value, key);
        else if (key == "asset_availability_prob") p.asset_availability_prob = as_number(value, key);
        else bad_config("unknown config key '" + key + "'");
    }
    return p;
}

SimulationParams load_params_file(const std::string& path) {
    return params_from_json_text(read_file(path));
}

std::string params_echo(const SimulationParams& p) {
    nlohmann::ordered_json doc;
    doc["min_weight_seed"] = p.min_weight_seed;
    doc["max_weight_seed"] = p.max_weight_seed;
    doc["delta"] = p.delta;
    doc["max_bridge_stretch"] = p.max_bridge_stretch;
    doc["min_network_weight_trim"] = p.min_network_weight_trim;
    doc["max_network_weight_trim"] = p.max_network_weight_trim;
    doc["min_bridge_capacity"] = p.min_bridge_capacity;
    doc["max_bridge_capacity"] = p.max_bridge_capacity;
    doc["min_current_amount"] = p.min_current_amount;
    doc["max_current_amount"] = p.max_current_amount;
    doc["n_assets_p"] = p.n_assets_p;
    doc["n_assets_q"] = p.n_assets_q;
    doc["n_scenarios"] = p.n_scenarios;
    doc["rng_seed"] = p.rng_seed;
    doc["asset_availability_prob"] = p.asset_availability_prob;
    return doc.dump(2);
}

RouteProblem route_problem_from_json_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        bad_config(std::string("route file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) bad_config("route file root must be an object");

    RouteProblem problem;
    bool saw_networks = false;
    bool saw_assets = false;

    for (const auto& [key, value] : doc.items()) {
        if (key == "networks") {
            if (!value.is_array()) bad_config("'networks' must be an array");
            saw_networks = true;
            for (const auto& item : value) {
                if (!item.is_object()) bad_config("network entries must be objects");
                RouteNetwork net;
                bool saw_id = false;
                for (const auto& [k, v] : item.items()) {
                    if (k == "id") {
                        if (!v.is_string()) bad_config("network 'id' must be a string");
                        net.id = v.get<std::string>();
                        saw_id = true;
                    } else if (k == "current") net.current_total = as_number(v, k);
                    else if (k == "tbd") net.tbd = as_number(v, k);
                    else bad_config("unknown network key '" + k + "'");
                }
                if (!saw_id) bad_config("network entry is missing 'id'");
                problem.networks.push_back(std::move(net));
            }
        } else if (key == "assets") {
            if (!value.is_array()) bad_config("'assets' must be an array");
            saw_assets = true;
            for (const auto& item : value) {
                if (!item.is_object()) bad_config("asset entries must be objects");
                RouteAsset asset;
                bool saw_id = false, saw_min = false, saw_ideal = false, saw_max = false;
                for (const auto& [k, v] : item.items()) {
                    if (k == "id") {
                        if (!v.is_string()) bad_config("asset 'id' must be a string");
                        asset.id = v.get<std::string>();
                        saw_id = true;
                    } else if (k == "min") { asset.band.raw_min = as_number(v, k); saw_min = true; }
                    else if (k == "ideal") { asset.band.raw_ideal = as_number(v, k); saw_ideal = true; }
                    else if (k == "max") { asset.band.raw_max = as_number(v, k); saw_max = true; }
                    else if (k == "networks") {
                        if (!v.is_array()) bad_config("asset 'networks' must be an array");
                        for (const auto& n : v) {
                            if (!n.is_string()) bad_config("asset network ids must be strings");
                            asset.networks.push_back(n.get<std::string>());
                        }
                    } else bad_config("unknown asset key '" + k + "'");
                }
                if (!saw_id) bad_config("asset entry is missing 'id'");
                if (!saw_min || !saw_ideal || !saw_max)
                    bad_config("asset '" + asset.id + "' needs min, ideal and max");
                if (asset.networks.empty())
                    bad_config("asset '" + asset.id + "' lists no networks");
                problem.assets.push_back(std::move(asset));
            }
        } else if (key == "bridges") {
            if (!value.is_array()) bad_config("'bridges' must be an array");
            for (const auto& item : value) {
                if (!item.is_object()) bad_config("bridge entries must be objects");
                RouteBridge bridge;
                bool saw_from = false, saw_to = false, saw_cap = false;
                for (const auto& [k, v] : item.items()) {
                    if (k == "from") {
                        if (!v.is_string()) bad_config("bridge 'from' must be a string");
                        bridge.from = v.get<std::string>();
                        saw_from = true;
                    } else if (k == "to") {
                        if (!v.is_string()) bad_config("bridge 'to' must be a string");
                        bridge.to = v.get<std::string>();
                        saw_to = true;
                    } else if (k == "capacity") { bridge.capacity = as_number(v, k); saw_cap = true; }
                    else bad_config("unknown bridge key '" + k + "'");
                }
                if (!saw_from || !saw_to || !saw_cap)
                    bad_config("bridge entries need from, to and capacity");
                if (bridge.from == bridge.to)
                    bad_config("bridge endpoints must differ");
                problem.bridges.push_back(std::move(bridge));
            }
        } else if (key == "trim_min") problem.trim.min_weight = as_number(value, key);
        else if (key == "trim_max") problem.trim.max_weight = as_number(value, key);
        else if (key == "max_stretch") problem.max_stretch = as_number(value, key);
        else if (key == "delta") problem.delta = as_number(value, key);
        else if (key == "max_iterations") {
            int n = as_int(value, key);
            if (n < 0) bad_config("'max_iterations' must be non-negative");
            problem.max_iterations = n;
        } else bad_config("unknown route file key '" + key + "'");
    }

    if (!saw_networks || problem.networks.empty()) bad_config("route file needs networks");
    if (!saw_assets || problem.assets.empty()) bad_config("route file needs assets");

    for (std::size_t i = 0; i < problem.networks.size(); ++i)
        for (std::size_t j = i + 1; j < problem.networks.size(); ++j)
            if (problem.networks[i].id == problem.networks[j].id)
                bad_config("duplicate network id '" + problem.networks[i].id + "'");

    auto known = [&](const std::string& id) {
        for (const auto& n : problem.networks)
            if (n.id == id) return true;
        return false;
    };
    for (const auto& a : problem.assets)
        for (const auto& n : a.networks)
            if (!known(n)) bad_config("asset '" + a.id + "' references unknown network '" + n + "'");
    for (const auto& b : problem.bridges) {
        if (!known(b.from)) bad_config("bridge references unknown network '" + b.from + "'");
        if (!known(b.to)) bad_config("bridge references unknown network '" + b.to + "'");
    }
    return problem;
}

RouteProblem load_route_problem_file(const std::string& path) {
    return route_problem_from_json_text(read_file(path));
}

}  // namespace bridgeflow
