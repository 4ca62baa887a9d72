/* bridgeflow: cross-network rebalancing transfers, batch simulation and
 * pending-flow forecasting behind a plain C interface.
 *
 * Every function that can fail returns bf_status; BF_OK is 0. Handles are
 * opaque and must be released with their matching _free function. Pointers
 * returned by getters stay valid until the owning handle is freed. The
 * library never prints; bf_last_error_message() carries failure detail for
 * the calling thread.
 */
#ifndef BRIDGEFLOW_H
#define BRIDGEFLOW_H

#include <stddef.h>
#include <stdint.h>

#ifndef BF_API
#if defined(_WIN32)
#define BF_API
#else
#define BF_API __attribute__((visibility("default")))
#endif
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bf_status {
    BF_OK = 0,
    BF_INVALID_ARGUMENT = 1,
    BF_NEGATIVE_AMOUNT = 2,
    BF_WITHDRAWAL_EXCEEDS_INVESTMENT = 3,
    BF_UNDEFINED_RATIO = 4,
    BF_DEGENERATE_DENOMINATOR = 5,
    BF_UNDEFINED_SHARE = 6,
    BF_INSUFFICIENT_HISTORY = 7,
    BF_OUT_OF_RANGE = 8,
    BF_PARSE_ERROR = 9,
    BF_IO_ERROR = 10,
    BF_UNKNOWN_ERROR = 99
} bf_status;

/* Stable name for a status code, e.g. "WithdrawalExceedsInvestment". */
BF_API const char* bf_status_name(bf_status status);

/* Human-readable detail for the most recent failure on this thread. */
BF_API const char* bf_last_error_message(void);

BF_API const char* bf_version(void);

/* Library defaults: indicator softening delta and the band stretch cap. */
BF_API double bf_default_delta(void);
BF_API double bf_default_max_stretch(void);

/* Smooth positivity gate max(x + delta, 0) / (|x| + delta). */
BF_API bf_status bf_positivity_indicator(double x, double delta, double* out);

/* ------------------------------------------------------------------ */
/* Two-network scenario                                               */
/* ------------------------------------------------------------------ */

typedef struct bf_scenario bf_scenario;
typedef struct bf_result bf_result;

/* A fresh scenario has zero totals, zero capacities, trim (0, 1) and the
 * library defaults for delta and the stretch cap. Returns NULL on OOM. */
BF_API bf_scenario* bf_scenario_new(void);
BF_API void bf_scenario_free(bf_scenario* scenario);

BF_API bf_status bf_scenario_set_network_p(bf_scenario* scenario, double current_total,
                                           double tbd);
BF_API bf_status bf_scenario_set_network_q(bf_scenario* scenario, double current_total,
                                           double tbd);
BF_API bf_status bf_scenario_set_bridge(bf_scenario* scenario, double capacity_pq,
                                        double capacity_qp);
BF_API bf_status bf_scenario_set_trim(bf_scenario* scenario, double min_weight,
                                      double max_weight);
BF_API bf_status bf_scenario_set_max_stretch(bf_scenario* scenario, double max_stretch);
BF_API bf_status bf_scenario_set_delta(bf_scenario* scenario, double delta);

/* Adds one asset with its global weight band. on_p / on_q say whether the
 * asset is tradable on each network (nonzero means yes). */
BF_API bf_status bf_scenario_add_asset(bf_scenario* scenario, const char* asset_id,
                                       double min_weight, double ideal_weight,
                                       double max_weight, int on_p, int on_q);

/* Runs the full pipeline. On success *out owns the result. */
BF_API bf_status bf_scenario_run(const bf_scenario* scenario, bf_result** out);
BF_API void bf_result_free(bf_result* result);

typedef enum bf_field {
    BF_FIELD_COLLECT_DEPLOY_DIFF = 0,
    BF_FIELD_RAW_STRETCH = 1,
    BF_FIELD_CAPPED_STRETCH = 2,
    BF_FIELD_TOTAL_WITH_TBD_P = 3,
    BF_FIELD_TOTAL_WITH_TBD_Q = 4,
    BF_FIELD_TOTAL_WITH_TBD_PQ = 5,
    BF_FIELD_MIN_CAPACITY_P = 6,
    BF_FIELD_MAX_CAPACITY_P = 7,
    BF_FIELD_MIN_CAPACITY_Q = 8,
    BF_FIELD_MAX_CAPACITY_Q = 9,
    BF_FIELD_OUTSIDE_BAND_P = 10,
    BF_FIELD_OUTSIDE_BAND_Q = 11,
    BF_FIELD_MAX_SEND_P = 12,
    BF_FIELD_MAX_SEND_Q = 13,
    BF_FIELD_MAX_RECEIVE_P = 14,
    BF_FIELD_MAX_RECEIVE_Q = 15,
    BF_FIELD_SIMPLE_PQ = 16,
    BF_FIELD_SIMPLE_QP = 17,
    BF_FIELD_DELTA_PQ = 18,
    BF_FIELD_DELTA_QP = 19,
    BF_FIELD_PQ_FIRST_DELTA = 20,
    BF_FIELD_PQ_FIRST_SIMPLE = 21,
    BF_FIELD_PQ_SECOND = 22,
    BF_FIELD_QP_FIRST_DELTA = 23,
    BF_FIELD_QP_FIRST_SIMPLE = 24,
    BF_FIELD_QP_SECOND = 25,
    BF_FIELD_OUTSIDE_COMPARE_PQ = 26,
    BF_FIELD_OUTSIDE_COMPARE_QP = 27,
    BF_FIELD_INDICATOR_P = 28,
    BF_FIELD_INDICATOR_Q = 29,
    BF_FIELD_NETTED = 30
} bf_field;

BF_API bf_status bf_result_get(const bf_result* result, bf_field field, double* out);

/* 1 when unmet redemption need survives the transfers, else 0. */
BF_API int bf_result_multi_round(const bf_result* result);

/* 1 when the summed capacity bands cannot contain the combined total. */
BF_API int bf_result_bands_infeasible(const bf_result* result);

/* ------------------------------------------------------------------ */
/* Batch simulation                                                   */
/* ------------------------------------------------------------------ */

typedef struct bf_sim_config bf_sim_config;
typedef struct bf_batch bf_batch;

/* Starts from the stock defaults. Returns NULL on OOM. */
BF_API bf_sim_config* bf_sim_config_new(void);
BF_API void bf_sim_config_free(bf_sim_config* config);

/* Numeric access by key, with the same key set as the JSON config file.
 * Unknown keys fail with BF_PARSE_ERROR; integer-valued keys reject
 * non-integral values. */
BF_API bf_status bf_sim_config_set(bf_sim_config* config, const char* key, double value);
BF_API bf_status bf_sim_config_get(const bf_sim_config* config, const char* key,
                                   double* out);

/* Replaces the whole config with the contents of a JSON file. */
BF_API bf_status bf_sim_config_load_file(bf_sim_config* config, const char* path);

/* Runs the batch: designed boundary scenarios first, then the configured
 * number of sampled ones. Row-level pipeline errors are recorded per row and
 * do not fail the batch. */
BF_API bf_status bf_simulate(const bf_sim_config* config, bf_batch** out);
BF_API void bf_batch_free(bf_batch* batch);

typedef enum bf_table_kind {
    BF_TABLE_INPUTS = 0,
    BF_TABLE_TRANSFERS = 1,
    BF_TABLE_INTERMEDIATES = 2
} bf_table_kind;

BF_API size_t bf_batch_rows(const bf_batch* batch);
BF_API size_t bf_batch_cols(const bf_batch* batch, bf_table_kind table);

/* NULL when col is out of range. */
BF_API const char* bf_batch_col_name(const bf_batch* batch, bf_table_kind table,
                                     size_t col);

/* Output cells of errored rows are quiet NaN; inputs are always present. */
BF_API bf_status bf_batch_cell(const bf_batch* batch, bf_table_kind table, size_t row,
                               size_t col, double* out);

/* BF_OK for clean rows, otherwise the error that stopped the row. */
BF_API bf_status bf_batch_row_status(const bf_batch* batch, size_t row);

/* Writes one table as CSV. round_whole nonzero formats cells as whole USD;
 * otherwise cells use the shortest representation that parses back exactly. */
BF_API bf_status bf_batch_write_csv(const bf_batch* batch, bf_table_kind table,
                                    const char* path, int round_whole);

/* ------------------------------------------------------------------ */
/* Multi-network routing                                              */
/* ------------------------------------------------------------------ */

typedef struct bf_route_problem bf_route_problem;
typedef struct bf_route_result bf_route_result;

BF_API bf_route_problem* bf_route_problem_new(void);
BF_API void bf_route_problem_free(bf_route_problem* problem);

BF_API bf_status bf_route_problem_add_network(bf_route_problem* problem, const char* id,
                                              double current_total, double tbd);
BF_API bf_status bf_route_problem_add_asset(bf_route_problem* problem, const char* id,
                                            double min_weight, double ideal_weight,
                                            double max_weight,
                                            const char* const* network_ids,
                                            size_t network_count);
BF_API bf_status bf_route_problem_add_bridge(bf_route_problem* problem, const char* from,
                                             const char* to, double capacity);
BF_API bf_status bf_route_problem_set_trim(bf_route_problem* problem, double min_weight,
                                           double max_weight);
BF_API bf_status bf_route_problem_set_max_stretch(bf_route_problem* problem,
                                                  double max_stretch);
BF_API bf_status bf_route_problem_set_delta(bf_route_problem* problem, double delta);

/* 0 restores the default budget of n. (n - 1) pair passes. */
BF_API bf_status bf_route_problem_set_max_iterations(bf_route_problem* problem,
                                                     int max_iterations);

/* Replaces the whole problem with the contents of a JSON file. */
BF_API bf_status bf_route_problem_load_file(bf_route_problem* problem, const char* path);

BF_API bf_status bf_route_run(const bf_route_problem* problem, bf_route_result** out);
BF_API void bf_route_result_free(bf_route_result* result);

BF_API size_t bf_route_transfer_count(const bf_route_result* result);
BF_API bf_status bf_route_transfer(const bf_route_result* result, size_t index,
                                   const char** from, const char** to, double* amount);

BF_API size_t bf_route_residual_count(const bf_route_result* result);
BF_API bf_status bf_route_residual(const bf_route_result* result, size_t index,
                                   const char** network_id, double* outside_band);

/* ------------------------------------------------------------------ */
/* Pending-flow history and forecasting                               */
/* ------------------------------------------------------------------ */

typedef struct bf_flow_series bf_flow_series;

/* values[i] is the signed flow over (timestamps[i], timestamps[i+1]], so
 * timestamp_count must equal value_count + 1. Every rebalance mark must
 * coincide with some timestamp. */
BF_API bf_status bf_flow_series_new(const double* timestamps, size_t timestamp_count,
                                    const double* values, size_t value_count,
                                    const double* marks, size_t mark_count,
                                    bf_flow_series** out);
BF_API void bf_flow_series_free(bf_flow_series* series);

/* Net signed flow over (last_rebalance, now]. */
BF_API bf_status bf_actuals_since_rebalance(const bf_flow_series* series,
                                            double last_rebalance, double now,
                                            double* out);

/* Mean per-horizon flow over non-overlapping trailing windows, skipping
 * windows that contain a rebalance mark. */
BF_API bf_status bf_historical_average_forecast(const bf_flow_series* series,
                                                double horizon, double* out);

/* Samples a geometric Brownian motion path: out_values must hold steps + 1
 * doubles; out_values[0] is initial and every value is strictly positive. */
BF_API bf_status bf_gbm_sample_path(double initial, double drift, double volatility,
                                    double horizon, int steps, uint64_t seed,
                                    double* out_values, size_t out_count);

/* One draw of |N(mu, sigma^2)|. */
BF_API bf_status bf_folded_normal_sample(double mu, double sigma, uint64_t seed,
                                         double* out);

#ifdef __cplusplus
}
#endif

#endif /* BRIDGEFLOW_H */
