#include "bridgeflow/bridgeflow.h"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <memory>
#include <new>
#include <string>
#include <utility>
#include <vector>

#include "../core/forecast.hpp"
#include "../core/route.hpp"
#include "../core/simulate.hpp"

using namespace bridgeflow;

// Handle definitions. Each is a thin owner around the core type.
struct bf_scenario {
    PipelineInput input;
};

struct bf_result {
    PipelineResult result;
};

struct bf_sim_config {
    SimulationParams params;
};

struct bf_batch {
    BatchResult batch;
    Table tables[3];
};

struct bf_route_problem {
    RouteProblem problem;
};

struct bf_route_result {
    RouteResult result;
};

struct bf_flow_series {
    FlowSeries series;
};

namespace {

thread_local std::string g_last_error;

bf_status to_status(errc code) {
    switch (code) {
        case errc::ok: return BF_OK;
        case errc::invalid_argument: return BF_INVALID_ARGUMENT;
        case errc::negative_amount: return BF_NEGATIVE_AMOUNT;
        case errc::withdrawal_exceeds_investment: return BF_WITHDRAWAL_EXCEEDS_INVESTMENT;
        case errc::undefined_ratio: return BF_UNDEFINED_RATIO;
        case errc::degenerate_denominator: return BF_DEGENERATE_DENOMINATOR;
        case errc::undefined_share: return BF_UNDEFINED_SHARE;
        case errc::insufficient_history: return BF_INSUFFICIENT_HISTORY;
        case errc::out_of_range: return BF_OUT_OF_RANGE;
        case errc::parse_error: return BF_PARSE_ERROR;
        case errc::io_error: return BF_IO_ERROR;
    }
    return BF_UNKNOWN_ERROR;
}

bf_status set_error(bf_status status, const char* message) {
    g_last_error = message;
    return status;
}

template <typename F>
bf_status guard(F&& f) {
    try {
        f();
        g_last_error.clear();
        return BF_OK;
    } catch (const Error& e) {
        g_last_error = e.what();
        return to_status(e.code());
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return BF_UNKNOWN_ERROR;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return BF_UNKNOWN_ERROR;
    }
}

bool integral_config_key(const std::string& key) {
    return key == "n_assets_p" || key == "n_assets_q" || key == "n_scenarios" ||
           key == "rng_seed";
}

const Table* table_of(const bf_batch* batch, bf_table_kind kind) {
    if (!batch) return nullptr;
    switch (kind) {
        case BF_TABLE_INPUTS: return &batch->tables[0];
        case BF_TABLE_TRANSFERS: return &batch->tables[1];
        case BF_TABLE_INTERMEDIATES: return &batch->tables[2];
    }
    return nullptr;
}

}  // namespace

extern "C" {

const char* bf_status_name(bf_status status) {
    switch (status) {
        case BF_OK: return "Ok";
        case BF_INVALID_ARGUMENT: return errc_name(errc::invalid_argument);
        case BF_NEGATIVE_AMOUNT: return errc_name(errc::negative_amount);
        case BF_WITHDRAWAL_EXCEEDS_INVESTMENT:
            return errc_name(errc::withdrawal_exceeds_investment);
        case BF_UNDEFINED_RATIO: return errc_name(errc::undefined_ratio);
        case BF_DEGENERATE_DENOMINATOR: return errc_name(errc::degenerate_denominator);
        case BF_UNDEFINED_SHARE: return errc_name(errc::undefined_share);
        case BF_INSUFFICIENT_HISTORY: return errc_name(errc::insufficient_history);
        case BF_OUT_OF_RANGE: return errc_name(errc::out_of_range);
        case BF_PARSE_ERROR: return errc_name(errc::parse_error);
        case BF_IO_ERROR: return errc_name(errc::io_error);
        case BF_UNKNOWN_ERROR: return "UnknownError";
    }
    return "UnknownError";
}

const char* bf_last_error_message(void) { return g_last_error.c_str(); }

const char* bf_version(void) { return "1.0.0"; }

double bf_default_delta(void) { return default_delta; }

double bf_default_max_stretch(void) { return default_max_stretch; }

bf_status bf_positivity_indicator(double x, double delta, double* out) {
    if (!out) return set_error(BF_INVALID_ARGUMENT, "out is null");
    return guard([&] { *out = positivity_indicator(x, delta); });
}

/* -------------------------- scenario -------------------------- */

bf_scenario* bf_scenario_new(void) {
    auto* s = new (std::nothrow) bf_scenario();
    if (!s) return nullptr;
    s->input.p.network_id = "P";
    s->input.q.network_id = "Q";
    return s;
}

void bf_scenario_free(bf_scenario* scenario) { delete scenario; }

bf_status bf_scenario_set_network_p(bf_scenario* scenario, double current_total,
                                    double tbd) {
    if (!scenario) return set_error(BF_INVALID_ARGUMENT, "scenario is null");
    scenario->input.p.current_total = current_total;
    scenario->input.p.tbd = tbd;
    return BF_OK;
}

bf_status bf_scenario_set_network_q(bf_scenario* scenario, double current_total,
                                    double tbd) {
    if (!scenario) return set_error(BF_INVALID_ARGUMENT, "scenario is null");
    scenario->input.q.current_total = current_total;
    scenario->input.q.tbd = tbd;
    return BF_OK;
}

bf_status bf_scenario_set_bridge(bf_scenario* scenario, double capacity_pq,
                                 double capacity_qp) {
    if (!scenario) return set_error(BF_INVALID_ARGUMENT, "scenario is null");
    scenario->input.bridge.capacity_pq = capacity_pq;
    scenario->input.bridge.capacity_qp = capacity_qp;
    return BF_OK;
}

bf_status bf_scenario_set_trim(bf_scenario* scenario, double min_weight,
                               double max_weight) {
    if (!scenario) return set_error(BF_INVALID_ARGUMENT, "scenario is null");
    scenario->input.trim.min_weight = min_weight;
    scenario->input.trim.max_weight = max_weight;
    return BF_OK;
}

bf_status bf_scenario_set_max_stretch(bf_scenario* scenario, double max_stretch) {
    if (!scenario) return set_error(BF_INVALID_ARGUMENT, "scenario is null");
    scenario->input.max_stretch = max_stretch;
    return BF_OK;
}

bf_status bf_scenario_set_delta(bf_scenario* scenario, double delta) {
    if (!scenario) return set_error(BF_INVALID_ARGUMENT, "scenario is null");
    scenario->input.delta = delta;
    return BF_OK;
}

bf_status bf_scenario_add_asset(bf_scenario* scenario, const char* asset_id,
                                double min_weight, double ideal_weight,
                                double max_weight, int on_p, int on_q) {
    if (!scenario) return set_error(BF_INVALID_ARGUMENT, "scenario is null");
    if (!asset_id) return set_error(BF_INVALID_ARGUMENT, "asset_id is null");
    return guard([&] {
        PipelineAsset asset;
        asset.id = asset_id;
        asset.band.raw_min = min_weight;
        asset.band.raw_ideal = ideal_weight;
        asset.band.raw_max = max_weight;
        asset.on_p = on_p != 0;
        asset.on_q = on_q != 0;
        scenario->input.assets.push_back(std::move(asset));
    });
}

bf_status bf_scenario_run(const bf_scenario* scenario, bf_result** out) {
    if (!scenario) return set_error(BF_INVALID_ARGUMENT, "scenario is null");
    if (!out) return set_error(BF_INVALID_ARGUMENT, "out is null");
    *out = nullptr;
    return guard([&] {
        auto result = std::make_unique<bf_result>();
        result->result = run_pipeline(scenario->input);
        *out = result.release();
    });
}

void bf_result_free(bf_result* result) { delete result; }

bf_status bf_result_get(const bf_result* result, bf_field field, double* out) {
    if (!result) return set_error(BF_INVALID_ARGUMENT, "result is null");
    if (!out) return set_error(BF_INVALID_ARGUMENT, "out is null");
    const PipelineResult& r = result->result;
    switch (field) {
        case BF_FIELD_COLLECT_DEPLOY_DIFF: *out = r.stretch.collect_deploy_diff; return BF_OK;
        case BF_FIELD_RAW_STRETCH: *out = r.stretch.raw_stretch; return BF_OK;
        case BF_FIELD_CAPPED_STRETCH: *out = r.stretch.capped_stretch; return BF_OK;
        case BF_FIELD_TOTAL_WITH_TBD_P: *out = r.total_with_tbd_p; return BF_OK;
        case BF_FIELD_TOTAL_WITH_TBD_Q: *out = r.total_with_tbd_q; return BF_OK;
        case BF_FIELD_TOTAL_WITH_TBD_PQ: *out = r.total_with_tbd_pq; return BF_OK;
        case BF_FIELD_MIN_CAPACITY_P: *out = r.capacity_p.min_capacity; return BF_OK;
        case BF_FIELD_MAX_CAPACITY_P: *out = r.capacity_p.max_capacity; return BF_OK;
        case BF_FIELD_MIN_CAPACITY_Q: *out = r.capacity_q.min_capacity; return BF_OK;
        case BF_FIELD_MAX_CAPACITY_Q: *out = r.capacity_q.max_capacity; return BF_OK;
        case BF_FIELD_OUTSIDE_BAND_P: *out = r.assess_p.outside_band; return BF_OK;
        case BF_FIELD_OUTSIDE_BAND_Q: *out = r.assess_q.outside_band; return BF_OK;
        case BF_FIELD_MAX_SEND_P: *out = r.assess_p.max_send; return BF_OK;
        case BF_FIELD_MAX_SEND_Q: *out = r.assess_q.max_send; return BF_OK;
        case BF_FIELD_MAX_RECEIVE_P: *out = r.assess_p.max_receive; return BF_OK;
        case BF_FIELD_MAX_RECEIVE_Q: *out = r.assess_q.max_receive; return BF_OK;
        case BF_FIELD_SIMPLE_PQ: *out = r.decision.simple_pq; return BF_OK;
        case BF_FIELD_SIMPLE_QP: *out = r.decision.simple_qp; return BF_OK;
        case BF_FIELD_DELTA_PQ: *out = r.decision.delta_pq; return BF_OK;
        case BF_FIELD_DELTA_QP: *out = r.decision.delta_qp; return BF_OK;
        case BF_FIELD_PQ_FIRST_DELTA: *out = r.terms.pq_first_delta; return BF_OK;
        case BF_FIELD_PQ_FIRST_SIMPLE: *out = r.terms.pq_first_simple; return BF_OK;
        case BF_FIELD_PQ_SECOND: *out = r.terms.pq_second; return BF_OK;
        case BF_FIELD_QP_FIRST_DELTA: *out = r.terms.qp_first_delta; return BF_OK;
        case BF_FIELD_QP_FIRST_SIMPLE: *out = r.terms.qp_first_simple; return BF_OK;
        case BF_FIELD_QP_SECOND: *out = r.terms.qp_second; return BF_OK;
        case BF_FIELD_OUTSIDE_COMPARE_PQ: *out = r.outside_compare_pq; return BF_OK;
        case BF_FIELD_OUTSIDE_COMPARE_QP: *out = r.outside_compare_qp; return BF_OK;
        case BF_FIELD_INDICATOR_P: *out = r.indicator_p; return BF_OK;
        case BF_FIELD_INDICATOR_Q: *out = r.indicator_q; return BF_OK;
        case BF_FIELD_NETTED: *out = r.netted; return BF_OK;
    }
    return set_error(BF_OUT_OF_RANGE, "unknown result field");
}

int bf_result_multi_round(const bf_result* result) {
    return result && result->result.multi_round ? 1 : 0;
}

int bf_result_bands_infeasible(const bf_result* result) {
    return result && result->result.bands_infeasible ? 1 : 0;
}

/* -------------------------- simulation -------------------------- */

bf_sim_config* bf_sim_config_new(void) { return new (std::nothrow) bf_sim_config(); }

void bf_sim_config_free(bf_sim_config* config) { delete config; }

bf_status bf_sim_config_set(bf_sim_config* config, const char* key, double value) {
    if (!config) return set_error(BF_INVALID_ARGUMENT, "config is null");
    if (!key) return set_error(BF_INVALID_ARGUMENT, "key is null");
    return guard([&] {
        std::string k = key;
        if (integral_config_key(k) &&
            (!std::isfinite(value) || value != std::floor(value))) {
            fail(errc::parse_error, "config key '" + k + "' must be an integer");
        }
        SimulationParams& p = config->params;
        if (k == "min_weight_seed") p.min_weight_seed = value;
        else if (k == "max_weight_seed") p.max_weight_seed = value;
        else if (k == "delta") p.delta = value;
        else if (k == "max_bridge_stretch") p.max_bridge_stretch = value;
        else if (k == "min_network_weight_trim") p.min_network_weight_trim = value;
        else if (k == "max_network_weight_trim") p.max_network_weight_trim = value;
        else if (k == "min_bridge_capacity") p.min_bridge_capacity = value;
        else if (k == "max_bridge_capacity") p.max_bridge_capacity = value;
        else if (k == "min_current_amount") p.min_current_amount = value;
        else if (k == "max_current_amount") p.max_current_amount = value;
        else if (k == "n_assets_p") p.n_assets_p = static_cast<int>(value);
        else if (k == "n_assets_q") p.n_assets_q = static_cast<int>(value);
        else if (k == "n_scenarios") p.n_scenarios = static_cast<int>(value);
        else if (k == "rng_seed") {
            if (value < 0) fail(errc::parse_error, "rng_seed must be non-negative");
            p.rng_seed = static_cast<std::uint64_t>(value);
        } else if (k == "asset_availability_prob") p.asset_availability_prob = value;
        else fail(errc::parse_error, "unknown config key '" + k + "'");
    });
}

bf_status bf_sim_config_get(const bf_sim_config* config, const char* key, double* out) {
    if (!config) return set_error(BF_INVALID_ARGUMENT, "config is null");
    if (!key) return set_error(BF_INVALID_ARGUMENT, "key is null");
    if (!out) return set_error(BF_INVALID_ARGUMENT, "out is null");
    return guard([&] {
        const SimulationParams& p = config->params;
        std::string k = key;
        if (k == "min_weight_seed") *out = p.min_weight_seed;
        else if (k == "max_weight_seed") *out = p.max_weight_seed;
        else if (k == "delta") *out = p.delta;
        else if (k == "max_bridge_stretch") *out = p.max_bridge_stretch;
        else if (k == "min_network_weight_trim") *out = p.min_network_weight_trim;
        else if (k == "max_network_weight_trim") *out = p.max_network_weight_trim;
        else if (k == "min_bridge_capacity") *out = p.min_bridge_capacity;
        else if (k == "max_bridge_capacity") *out = p.max_bridge_capacity;
        else if (k == "min_current_amount") *out = p.min_current_amount;
        else if (k == "max_current_amount") *out = p.max_current_amount;
        else if (k == "n_assets_p") *out = p.n_assets_p;
        else if (k == "n_assets_q") *out = p.n_assets_q;
        else if (k == "n_scenarios") *out = p.n_scenarios;
        else if (k == "rng_seed") *out = static_cast<double>(p.rng_seed);
        else if (k == "asset_availability_prob") *out = p.asset_availability_prob;
        else fail(errc::parse_error, "unknown config key '" + k + "'");
    });
}

bf_status bf_sim_config_load_file(bf_sim_config* config, const char* path) {
    if (!config) return set_error(BF_INVALID_ARGUMENT, "config is null");
    if (!path) return set_error(BF_INVALID_ARGUMENT, "path is null");
    return guard([&] { config->params = load_params_file(path); });
}

bf_status bf_simulate(const bf_sim_config* config, bf_batch** out) {
    if (!config) return set_error(BF_INVALID_ARGUMENT, "config is null");
    if (!out) return set_error(BF_INVALID_ARGUMENT, "out is null");
    *out = nullptr;
    return guard([&] {
        auto batch = std::make_unique<bf_batch>();
        batch->batch = run_batch(config->params);
        batch->tables[0] = make_table(batch->batch, TableKind::inputs);
        batch->tables[1] = make_table(batch->batch, TableKind::transfers);
        batch->tables[2] = make_table(batch->batch, TableKind::intermediates);
        *out = batch.release();
    });
}

void bf_batch_free(bf_batch* batch) { delete batch; }

size_t bf_batch_rows(const bf_batch* batch) {
    return batch ? batch->batch.rows.size() : 0;
}

size_t bf_batch_cols(const bf_batch* batch, bf_table_kind table) {
    const Table* t = table_of(batch, table);
    return t ? t->columns.size() : 0;
}

const char* bf_batch_col_name(const bf_batch* batch, bf_table_kind table, size_t col) {
    const Table* t = table_of(batch, table);
    if (!t || col >= t->columns.size()) return nullptr;
    return t->columns[col].c_str();
}

bf_status bf_batch_cell(const bf_batch* batch, bf_table_kind table, size_t row,
                        size_t col, double* out) {
    if (!out) return set_error(BF_INVALID_ARGUMENT, "out is null");
    const Table* t = table_of(batch, table);
    if (!t) return set_error(BF_INVALID_ARGUMENT, "batch or table is invalid");
    if (row >= t->rows.size() || col >= t->rows[row].size())
        return set_error(BF_OUT_OF_RANGE, "cell index out of range");
    *out = t->rows[row][col];
    return BF_OK;
}

bf_status bf_batch_row_status(const bf_batch* batch, size_t row) {
    if (!batch) return set_error(BF_INVALID_ARGUMENT, "batch is null");
    if (row >= batch->batch.rows.size())
        return set_error(BF_OUT_OF_RANGE, "row index out of range");
    return to_status(batch->batch.rows[row].status);
}

bf_status bf_batch_write_csv(const bf_batch* batch, bf_table_kind table,
                             const char* path, int round_whole) {
    if (!path) return set_error(BF_INVALID_ARGUMENT, "path is null");
    const Table* t = table_of(batch, table);
    if (!t) return set_error(BF_INVALID_ARGUMENT, "batch or table is invalid");
    return guard([&] {
        std::ofstream out(path, std::ios::binary);
        if (!out) fail(errc::io_error, std::string("could not open '") + path + "'");
        write_csv(*t, out, round_whole != 0);
        out.flush();
        if (!out) fail(errc::io_error, std::string("could not write '") + path + "'");
    });
}

/* -------------------------- routing -------------------------- */

bf_route_problem* bf_route_problem_new(void) {
    return new (std::nothrow) bf_route_problem();
}

void bf_route_problem_free(bf_route_problem* problem) { delete problem; }

bf_status bf_route_problem_add_network(bf_route_problem* problem, const char* id,
                                       double current_total, double tbd) {
    if (!problem) return set_error(BF_INVALID_ARGUMENT, "problem is null");
    if (!id) return set_error(BF_INVALID_ARGUMENT, "id is null");
    return guard([&] {
        problem->problem.networks.push_back(RouteNetwork{id, current_total, tbd});
    });
}

bf_status bf_route_problem_add_asset(bf_route_problem* problem, const char* id,
                                     double min_weight, double ideal_weight,
                                     double max_weight, const char* const* network_ids,
                                     size_t network_count) {
    if (!problem) return set_error(BF_INVALID_ARGUMENT, "problem is null");
    if (!id) return set_error(BF_INVALID_ARGUMENT, "id is null");
    if (!network_ids && network_count > 0)
        return set_error(BF_INVALID_ARGUMENT, "network_ids is null");
    return guard([&] {
        RouteAsset asset;
        asset.id = id;
        asset.band.raw_min = min_weight;
        asset.band.raw_ideal = ideal_weight;
        asset.band.raw_max = max_weight;
        for (size_t i = 0; i < network_count; ++i) {
            if (!network_ids[i]) fail(errc::invalid_argument, "network id is null");
            asset.networks.emplace_back(network_ids[i]);
        }
        problem->problem.assets.push_back(std::move(asset));
    });
}

bf_status bf_route_problem_add_bridge(bf_route_problem* problem, const char* from,
                                      const char* to, double capacity) {
    if (!problem) return set_error(BF_INVALID_ARGUMENT, "problem is null");
    if (!from || !to) return set_error(BF_INVALID_ARGUMENT, "endpoint is null");
    return guard([&] {
        problem->problem.bridges.push_back(RouteBridge{from, to, capacity});
    });
}

bf_status bf_route_problem_set_trim(bf_route_problem* problem, double min_weight,
                                    double max_weight) {
    if (!problem) return set_error(BF_INVALID_ARGUMENT, "problem is null");
    problem->problem.trim.min_weight = min_weight;
    problem->problem.trim.max_weight = max_weight;
    return BF_OK;
}

bf_status bf_route_problem_set_max_stretch(bf_route_problem* problem, double max_stretch) {
    if (!problem) return set_error(BF_INVALID_ARGUMENT, "problem is null");
    problem->problem.max_stretch = max_stretch;
    return BF_OK;
}

bf_status bf_route_problem_set_delta(bf_route_problem* problem, double delta) {
    if (!problem) return set_error(BF_INVALID_ARGUMENT, "problem is null");
    problem->problem.delta = delta;
    return BF_OK;
}

bf_status bf_route_problem_set_max_iterations(bf_route_problem* problem,
                                              int max_iterations) {
    if (!problem) return set_error(BF_INVALID_ARGUMENT, "problem is null");
    if (max_iterations < 0)
        return set_error(BF_INVALID_ARGUMENT, "max_iterations must be non-negative");
    problem->problem.max_iterations = max_iterations;
    return BF_OK;
}

bf_status bf_route_problem_load_file(bf_route_problem* problem, const char* path) {
    if (!problem) return set_error(BF_INVALID_ARGUMENT, "problem is null");
    if (!path) return set_error(BF_INVALID_ARGUMENT, "path is null");
    return guard([&] { problem->problem = load_route_problem_file(path); });
}

bf_status bf_route_run(const bf_route_problem* problem, bf_route_result** out) {
    if (!problem) return set_error(BF_INVALID_ARGUMENT, "problem is null");
    if (!out) return set_error(BF_INVALID_ARGUMENT, "out is null");
    *out = nullptr;
    return guard([&] {
        auto result = std::make_unique<bf_route_result>();
        result->result = round_robin_route(problem->problem);
        *out = result.release();
    });
}

void bf_route_result_free(bf_route_result* result) { delete result; }

size_t bf_route_transfer_count(const bf_route_result* result) {
    return result ? result->result.transfers.size() : 0;
}

bf_status bf_route_transfer(const bf_route_result* result, size_t index,
                            const char** from, const char** to, double* amount) {
    if (!result) return set_error(BF_INVALID_ARGUMENT, "result is null");
    if (!from || !to || !amount) return set_error(BF_INVALID_ARGUMENT, "out param is null");
    if (index >= result->result.transfers.size())
        return set_error(BF_OUT_OF_RANGE, "transfer index out of range");
    const RouteTransfer& t = result->result.transfers[index];
    *from = t.from.c_str();
    *to = t.to.c_str();
    *amount = t.amount;
    return BF_OK;
}

size_t bf_route_residual_count(const bf_route_result* result) {
    return result ? result->result.residuals.size() : 0;
}

bf_status bf_route_residual(const bf_route_result* result, size_t index,
                            const char** network_id, double* outside_band) {
    if (!result) return set_error(BF_INVALID_ARGUMENT, "result is null");
    if (!network_id || !outside_band)
        return set_error(BF_INVALID_ARGUMENT, "out param is null");
    if (index >= result->result.residuals.size())
        return set_error(BF_OUT_OF_RANGE, "residual index out of range");
    const RouteResidual& r = result->result.residuals[index];
    *network_id = r.network_id.c_str();
    *outside_band = r.outside_band;
    return BF_OK;
}

/* -------------------------- forecasting -------------------------- */

bf_status bf_flow_series_new(const double* timestamps, size_t timestamp_count,
                             const double* values, size_t value_count,
                             const double* marks, size_t mark_count,
                             bf_flow_series** out) {
    if (!out) return set_error(BF_INVALID_ARGUMENT, "out is null");
    if (!timestamps && timestamp_count > 0)
        return set_error(BF_INVALID_ARGUMENT, "timestamps is null");
    if (!values && value_count > 0)
        return set_error(BF_INVALID_ARGUMENT, "values is null");
    if (!marks && mark_count > 0) return set_error(BF_INVALID_ARGUMENT, "marks is null");
    *out = nullptr;
    return guard([&] {
        FlowSeries series(std::vector<double>(timestamps, timestamps + timestamp_count),
                          std::vector<double>(values, values + value_count),
                          std::vector<double>(marks, marks + mark_count));
        *out = new bf_flow_series{std::move(series)};
    });
}

void bf_flow_series_free(bf_flow_series* series) { delete series; }

bf_status bf_actuals_since_rebalance(const bf_flow_series* series, double last_rebalance,
                                     double now, double* out) {
    if (!series) return set_error(BF_INVALID_ARGUMENT, "series is null");
    if (!out) return set_error(BF_INVALID_ARGUMENT, "out is null");
    return guard([&] { *out = actuals_since_rebalance(series->series, last_rebalance, now); });
}

bf_status bf_historical_average_forecast(const bf_flow_series* series, double horizon,
                                         double* out) {
    if (!series) return set_error(BF_INVALID_ARGUMENT, "series is null");
    if (!out) return set_error(BF_INVALID_ARGUMENT, "out is null");
    return guard([&] { *out = historical_average_forecast(series->series, horizon); });
}

bf_status bf_gbm_sample_path(double initial, double drift, double volatility,
                             double horizon, int steps, uint64_t seed,
                             double* out_values, size_t out_count) {
    if (!out_values) return set_error(BF_INVALID_ARGUMENT, "out_values is null");
    if (steps < 1 || out_count != static_cast<size_t>(steps) + 1)
        return set_error(BF_INVALID_ARGUMENT, "out_count must equal steps + 1");
    return guard([&] {
        GbmParams params;
        params.initial = initial;
        params.drift = drift;
        params.volatility = volatility;
        params.horizon = horizon;
        params.steps = steps;
        std::vector<double> path = gbm_sample_path(params, seed);
        for (size_t i = 0; i < out_count; ++i) out_values[i] = path[i];
    });
}

bf_status bf_folded_normal_sample(double mu, double sigma, uint64_t seed, double* out) {
    if (!out) return set_error(BF_INVALID_ARGUMENT, "out is null");
    return guard([&] { *out = folded_normal_sample(mu, sigma, seed); });
}

}  // extern "C"
