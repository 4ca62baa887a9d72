#pragma once

#include "types.hpp"

namespace bridgeflow {

// Point estimates of one network's pending flow and invested amount.
struct NetworkFlowEstimate {
    double tbd_estimate = 0.0;
    double current_estimate = 0.0;
};

// Absolute difference between the two networks' deploy ratios tbd/current.
// A network with nothing invested and nothing pending contributes ratio 0;
// nothing invested but a pending flow is an undefined ratio and errors.
double collect_deploy_diff(const NetworkFlowEstimate& p, const NetworkFlowEstimate& q);

// Scales the ratio difference by overall flow pressure relative to what the
// system can absorb (combined invested funds plus the P->Q bridge capacity):
//   diff * (1 + (tbd_p + tbd_q) / (current_p + current_q + capacity_pq))
// Non-negative for every scenario accepted by validate_scenario.
double bridge_stretch(const NetworkFlowEstimate& p, const NetworkFlowEstimate& q,
                      double bridge_capacity_pq);

// Clamps the stretch magnitude: min(|raw_stretch|, max_stretch).
double cap_stretch(double raw_stretch, double max_stretch);

// Widens a band symmetrically: stretched_min = raw_min * (1 - stretch),
// stretched_max = raw_max * (1 + stretch). The ideal weight is unchanged.
AssetWeightBand stretch_band(const AssetWeightBand& band, double stretch);

// Convenience: runs the three steps above and records all intermediates.
StretchResult make_stretch_result(const NetworkFlowEstimate& p, const NetworkFlowEstimate& q,
                                  double bridge_capacity_pq, double max_stretch);

}  // namespace bridgeflow
