#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "route.hpp"
#include "transfer.hpp"

namespace bridgeflow {

// Batch configuration. Defaults reproduce the stock study setup; every field
// can be overridden from a JSON config file (unknown keys are rejected).
struct SimulationParams {
    double min_weight_seed = 0.01;
    double max_weight_seed = 0.40;
    double delta = default_delta;
    double max_bridge_stretch = default_max_stretch;
    double min_network_weight_trim = 0.0;
    double max_network_weight_trim = 1.0;
    double min_bridge_capacity = 0.0;
    double max_bridge_capacity = 100000.0;
    double min_current_amount = 10000.0;
    double max_current_amount = 100000.0;
    int n_assets_p = 5;
    int n_assets_q = 5;
    int n_scenarios = 20;  // random rows; designed rows are always included
    std::uint64_t rng_seed = 42;
    // Probability an asset trades on each network. 1.0 keeps every asset on
    // both networks, which the equal-and-opposite transfer property needs.
    double asset_availability_prob = 1.0;

    TrimConfig trim() const { return {min_network_weight_trim, max_network_weight_trim}; }
};

struct ScenarioProvenance {
    bool designed = false;
    std::string name;     // designed scenarios
    std::uint64_t index = 0;  // random scenarios
};

// A fully specified two-network rebalancing case plus the sampled inputs that
// are echoed into the inputs table.
struct RebalanceScenario {
    NetworkState p;
    NetworkState q;
    BridgeLink bridge;
    std::vector<PipelineAsset> assets;
    double min_global_weight = 0.0;
    double max_global_weight = 0.0;
    ScenarioProvenance provenance;
};

// Hand-built boundary and behavior cases, always emitted before random rows.
std::vector<RebalanceScenario> designed_scenarios();

// Deterministic function of (params.rng_seed, index). Draw order: min weight,
// max weight, capacity PQ, capacity QP, current P, current Q, tbd P, tbd Q.
// The tbd lower bounds make every draw pass validate_scenario by construction.
RebalanceScenario sample_scenario(const SimulationParams& params, std::uint64_t index);

struct BatchRow {
    RebalanceScenario scenario;
    std::optional<PipelineResult> result;
    errc status = errc::ok;  // non-ok rows keep inputs but have no outputs
};

struct BatchResult {
    SimulationParams params;
    std::vector<BatchRow> rows;
};

// Runs designed scenarios then params.n_scenarios random ones through the
// pipeline. Row errors are recorded per row; the batch always completes.
BatchResult run_batch(const SimulationParams& params);

enum class TableKind { inputs, transfers, intermediates };

struct Table {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

// Projects a batch onto one of the three report tables. Output cells of rows
// that errored are NaN; inputs are always present.
Table make_table(const BatchResult& batch, TableKind kind);

// Full-precision (shortest round-trip) CSV; round_whole formats cells as whole
// USD for display instead.
void write_csv(const Table& table, std::ostream& out, bool round_whole);

std::string format_cell(double value, bool round_whole);

// JSON config I/O. Unknown keys and wrong types are ParseError.
SimulationParams params_from_json_text(const std::string& text);
SimulationParams load_params_file(const std::string& path);
std::string params_echo(const SimulationParams& params);

// Route problem JSON (networks / assets / bridges + knobs shared with the
// simulator). Used by the route subcommand.
RouteProblem route_problem_from_json_text(const std::string& text);
RouteProblem load_route_problem_file(const std::string& path);

}  // namespace bridgeflow
