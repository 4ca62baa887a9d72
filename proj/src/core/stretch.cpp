#include "stretch.hpp"

#include <cmath>

namespace bridgeflow {

namespace {

double deploy_ratio(const NetworkFlowEstimate& n) {
    if (n.current_estimate == 0.0) {
        if (n.tbd_estimate == 0.0) {
            return 0.0;
        }
        fail(errc::undefined_ratio, "tbd pending on a network with nothing invested");
    }
    return n.tbd_estimate / n.current_estimate;
}

}  // namespace

double collect_deploy_diff(const NetworkFlowEstimate& p, const NetworkFlowEstimate& q) {
    return std::fabs(deploy_ratio(p) - deploy_ratio(q));
}

double bridge_stretch(const NetworkFlowEstimate& p, const NetworkFlowEstimate& q,
                      double bridge_capacity_pq) {
    double diff = collect_deploy_diff(p, q);
    double flow = p.tbd_estimate + q.tbd_estimate;
    double absorb = p.current_estimate + q.current_estimate + bridge_capacity_pq;
    if (absorb == 0.0) {
        if (flow == 0.0) {
            return diff;
        }
        fail(errc::degenerate_denominator, "no invested funds or bridge capacity to absorb flow");
    }
    return diff * (1.0 + flow / absorb);
}

double cap_stretch(double raw_stretch, double max_stretch) {
    if (max_stretch < 0.0) {
        fail(errc::invalid_argument, "max_stretch < 0");
    }
    return std::min(std::fabs(raw_stretch), max_stretch);
}

AssetWeightBand stretch_band(const AssetWeightBand& band, double stretch) {
    AssetWeightBand out = band;
    out.stretched_min = band.raw_min * (1.0 - stretch);
    out.stretched_max = band.raw_max * (1.0 + stretch);
    return out;
}

StretchResult make_stretch_result(const NetworkFlowEstimate& p, const NetworkFlowEstimate& q,
                                  double bridge_capacity_pq, double max_stretch) {
    StretchResult r;
    r.collect_deploy_diff = collect_deploy_diff(p, q);
    r.raw_stretch = bridge_stretch(p, q, bridge_capacity_pq);
    r.capped_stretch = cap_stretch(r.raw_stretch, max_stretch);
    r.cap = max_stretch;
    return r;
}

}  // namespace bridgeflow
