#pragma once

#include <string>
#include <vector>

#include "types.hpp"

namespace bridgeflow {

// Where a network's deployable total sits relative to its capacity band.
BandAssessment assess_band(double total_with_tbd, const CapacityBand& band);

// Smooth 0/1 gate: max(x + delta, 0) / (|x| + delta). Exactly 1 for x >= 0 and
// exactly 0 for x <= -delta; delta must be positive and is chosen well below
// any amount the caller treats as meaningful.
double positivity_indicator(double x, double delta);

// One direction's transfer split into its two clamped terms.
struct TransferTerms {
    double pq_first_delta = 0.0;
    double pq_first_simple = 0.0;
    double pq_second = 0.0;  // shared by both formulations
    double qp_first_delta = 0.0;
    double qp_first_simple = 0.0;
    double qp_second = 0.0;
};

struct SimpleTransfer {
    double pq = 0.0;
    double qp = 0.0;
    double pq_first = 0.0;
    double pq_second = 0.0;
    double qp_first = 0.0;
    double qp_second = 0.0;
};

struct DeltaTransfer {
    double pq = 0.0;
    double qp = 0.0;
    double pq_first = 0.0;
    double pq_second = 0.0;
    double qp_first = 0.0;
    double qp_second = 0.0;
    double indicator_p = 0.0;
    double indicator_q = 0.0;
    double compare_pq = 0.0;  // max(outside_p, -outside_q)
    double compare_qp = 0.0;  // max(outside_q, -outside_p)
};

// Plain formulation. Positive pq means P ships funds to Q over the P->Q
// bridge; the negative second term is Q shipping to P over the Q->P bridge.
// Each term is clamped to its own directed capacity, so at most one of the
// two terms is nonzero and |pq| never exceeds the capacity used.
SimpleTransfer transfer_simple(const BandAssessment& p, const BandAssessment& q,
                               const BridgeLink& bridge);

// Indicator-gated formulation. The outflow term compares both networks'
// outside-band amounts, so a redemption shortfall on the far side can pull
// funds down to this side's minimum band even when nothing sits above the
// maximum. Gating by the sign of outside_band keeps the two directions equal
// and opposite whenever band structure is symmetric across the pair.
DeltaTransfer transfer_delta(const BandAssessment& p, const BandAssessment& q,
                             const BridgeLink& bridge, double delta);

// One asset entering the pipeline: its raw global band plus availability.
struct PipelineAsset {
    std::string id;
    AssetWeightBand band;
    bool on_p = true;
    bool on_q = true;
};

struct PipelineInput {
    NetworkState p;
    NetworkState q;
    BridgeLink bridge;
    std::vector<PipelineAsset> assets;
    TrimConfig trim;
    double max_stretch = default_max_stretch;
    double delta = default_delta;
};

// Per-asset allocation detail kept for reporting.
struct AssetAllocation {
    std::string id;
    bool on_p = true;
    bool on_q = true;
    double share_untrimmed = 0.0;
    double share_p = 0.0;
    double share_q = 0.0;
    AssetWeightBand band_p;
    AssetWeightBand band_q;
};

struct PipelineResult {
    StretchResult stretch;
    double total_with_tbd_p = 0.0;
    double total_with_tbd_q = 0.0;
    double total_with_tbd_pq = 0.0;
    CapacityBand capacity_p;
    CapacityBand capacity_q;
    BandAssessment assess_p;
    BandAssessment assess_q;
    TransferDecision decision;
    TransferTerms terms;
    double outside_compare_pq = 0.0;
    double outside_compare_qp = 0.0;
    double indicator_p = 0.0;
    double indicator_q = 0.0;
    // Single net P->Q flow: simple_pq - simple_qp clamped to the directed caps.
    double netted = 0.0;
    // Unfilled redemption need remains after the delta transfers.
    bool multi_round = false;
    // Summed capacity bands cannot contain the combined total.
    bool bands_infeasible = false;
    std::vector<AssetAllocation> allocations;
};

// End-to-end: validate, stretch the bands, split them across networks, assess
// both sides and compute all transfer quantities. Throws on any module error.
PipelineResult run_pipeline(const PipelineInput& input);

}  // namespace bridgeflow
