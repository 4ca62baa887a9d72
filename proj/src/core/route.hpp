#pragma once

#include <optional>
#include <string>
#include <vector>

#include "transfer.hpp"

namespace bridgeflow {

// One network's appetite for moving funds. Positive ratios want outflows
// (deposits to deploy), negative ratios want inflows (withdrawals to cover).
// bootstrap marks the nothing-invested-but-flow-pending case; its ratio is
// +/- infinity so it sorts to the corresponding extreme.
struct NetworkNeed {
    std::string network_id;
    double need_ratio = 0.0;
    bool bootstrap = false;
    std::optional<BandAssessment> assessment;
};

// Descending by need_ratio, ties broken by network_id.
std::vector<NetworkNeed> sort_by_need(std::vector<NetworkNeed> needs);

struct RouteNetwork {
    std::string id;
    double current_total = 0.0;
    double tbd = 0.0;
};

struct RouteAsset {
    std::string id;
    AssetWeightBand band;                   // raw fields set
    std::vector<std::string> networks;      // where the asset is tradable
};

struct RouteBridge {
    std::string from;
    std::string to;
    double capacity = 0.0;
};

struct RouteProblem {
    std::vector<RouteNetwork> networks;
    std::vector<RouteAsset> assets;
    std::vector<RouteBridge> bridges;  // absent ordered pairs have capacity 0
    TrimConfig trim;
    double max_stretch = default_max_stretch;
    double delta = default_delta;
    int max_iterations = 0;  // 0 means n * (n - 1)
};

struct RouteTransfer {
    std::string from;
    std::string to;
    double amount = 0.0;  // strictly positive
};

struct RouteResidual {
    std::string network_id;
    double outside_band = 0.0;  // signed unmet need after routing
    double need_ratio = 0.0;
};

struct RouteIteration {
    std::string first;   // canonical pair orientation (lexicographic)
    std::string second;
    TransferDecision decision;
    double applied = 0.0;  // signed first->second flow
    double total_abs_residual = 0.0;
};

struct RouteResult {
    std::vector<RouteTransfer> transfers;
    std::vector<RouteResidual> residuals;
    std::vector<RouteIteration> iterations;
};

// Greedy pairwise matcher: repeatedly pairs the strongest outflow need with
// the strongest inflow need, runs the two-network pipeline on that pair in
// canonical id order, applies the delta-formulation transfer by moving tbd,
// and decrements the directed bridge capacity used. Sterile pairings advance
// round-robin through the remaining candidates. Stops when no pairing makes
// progress or after max_iterations. Unroutable demand does not throw; what
// cannot move shows up in the residuals.
RouteResult round_robin_route(const RouteProblem& problem);

}  // namespace bridgeflow
