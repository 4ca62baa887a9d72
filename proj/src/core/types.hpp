#pragma once

#include <string>
#include <vector>

#include "error.hpp"

namespace bridgeflow {

// Library-wide defaults: the indicator softening amount and the cap applied
// to the band stretch. Every layer (pipeline, router, simulator, C API)
// shares these definitions.
inline constexpr double default_delta = 0.0001;
inline constexpr double default_max_stretch = 0.2;

// A single asset holding on one network. quantity * price is the USD notional.
struct AssetPosition {
    std::string asset_id;
    double quantity = 0.0;
    double price = 0.0;
    bool available = true;

    double notional() const { return quantity * price; }
};

// One network's side of a rebalancing decision. current_total is invested USD,
// tbd is the pending flow: positive for deposits awaiting deployment, negative
// for withdrawal requests. positions may be empty for aggregate-only scenarios.
struct NetworkState {
    std::string network_id;
    double current_total = 0.0;
    double tbd = 0.0;
    std::vector<AssetPosition> positions;

    double total_with_tbd() const { return current_total + tbd; }
};

// Directed bridge capacities between the two networks, in USD per cycle.
struct BridgeLink {
    double capacity_pq = 0.0;
    double capacity_qp = 0.0;
};

// Weight band for one asset. raw_* come from the global allocation policy,
// stretched_* are widened for bridging frictions, network_* are the one-network
// projection after applying that network's share.
struct AssetWeightBand {
    double raw_min = 0.0;
    double raw_ideal = 0.0;
    double raw_max = 0.0;
    double stretched_min = 0.0;
    double stretched_max = 0.0;
    double network_min = 0.0;
    double network_ideal = 0.0;
    double network_max = 0.0;
};

struct StretchResult {
    double collect_deploy_diff = 0.0;
    double raw_stretch = 0.0;
    double capped_stretch = 0.0;
    double cap = 0.0;
};

struct TrimConfig {
    double min_weight = 0.0;
    double max_weight = 1.0;
};

// Per-network USD capacity range implied by the summed weight bands.
struct CapacityBand {
    double min_capacity = 0.0;
    double max_capacity = 0.0;
};

struct BandAssessment {
    double total_with_tbd = 0.0;
    double min_capacity = 0.0;
    double max_capacity = 0.0;
    // Signed: negative when the total sits below the minimum capacity,
    // positive above the maximum, zero inside the band.
    double outside_band = 0.0;
    double max_send = 0.0;
    double max_receive = 0.0;
};

// Transfer amounts in USD. *_pq is signed flow from P to Q (negative values
// mean Q ships funds to P); *_qp mirrors. "simple" pairs the plain outside-band
// comparison, "delta" the indicator-gated formulation.
struct TransferDecision {
    double simple_pq = 0.0;
    double simple_qp = 0.0;
    double delta_pq = 0.0;
    double delta_qp = 0.0;
};

// Checks a two-network scenario is economically admissible:
//   - current totals and bridge capacities are non-negative and finite,
//   - net withdrawals cannot exceed combined invested funds:
//       -(tbd_p + tbd_q) <= current_p + current_q
//   - when positions are supplied they sum to the stated current_total.
// Throws Error with NegativeAmount / WithdrawalExceedsInvestment / InvalidArgument.
void validate_scenario(const NetworkState& p, const NetworkState& q, const BridgeLink& bridge);

}  // namespace bridgeflow
