#include "transfer.hpp"

#include <algorithm>
#include <cmath>

#include "allocate.hpp"
#include "stretch.hpp"

namespace bridgeflow {

BandAssessment assess_band(double total_with_tbd, const CapacityBand& band) {
    if (band.min_capacity > band.max_capacity) {
        fail(errc::invalid_argument, "capacity band min > max");
    }
    BandAssessment a;
    a.total_with_tbd = total_with_tbd;
    a.min_capacity = band.min_capacity;
    a.max_capacity = band.max_capacity;
    a.outside_band = std::min(total_with_tbd - band.min_capacity, 0.0) +
                     std::max(total_with_tbd - band.max_capacity, 0.0);
    a.max_send = std::max(total_with_tbd - band.min_capacity, 0.0);
    a.max_receive = std::max(band.max_capacity - total_with_tbd, 0.0);
    return a;
}

double positivity_indicator(double x, double delta) {
    if (delta <= 0.0) {
        fail(errc::invalid_argument, "delta must be positive");
    }
    return std::max(x + delta, 0.0) / (std::fabs(x) + delta);
}

SimpleTransfer transfer_simple(const BandAssessment& p, const BandAssessment& q,
                               const BridgeLink& bridge) {
    SimpleTransfer t;
    t.pq_first = std::min(std::max(std::min(p.outside_band, q.max_receive), 0.0),
                          bridge.capacity_pq);
    t.pq_second = std::max(std::min(std::max(p.outside_band, -q.max_send), 0.0),
                           -bridge.capacity_qp);
    t.qp_first = std::min(std::max(std::min(q.outside_band, p.max_receive), 0.0),
                          bridge.capacity_qp);
    t.qp_second = std::max(std::min(std::max(q.outside_band, -p.max_send), 0.0),
                           -bridge.capacity_pq);
    t.pq = t.pq_first + t.pq_second;
    t.qp = t.qp_first + t.qp_second;
    return t;
}

DeltaTransfer transfer_delta(const BandAssessment& p, const BandAssessment& q,
                             const BridgeLink& bridge, double delta) {
    DeltaTransfer t;
    t.indicator_p = positivity_indicator(p.outside_band, delta);
    t.indicator_q = positivity_indicator(q.outside_band, delta);
    t.compare_pq = std::max(p.outside_band, -q.outside_band);
    t.compare_qp = std::max(q.outside_band, -p.outside_band);

    t.pq_first = std::min(
        std::max(std::min({t.compare_pq * t.indicator_p, q.max_receive, p.max_send}), 0.0),
        bridge.capacity_pq);
    t.pq_second = std::max(std::min(std::max(p.outside_band, -q.max_send), 0.0),
                           -bridge.capacity_qp);
    t.qp_first = std::min(
        std::max(std::min({t.compare_qp * t.indicator_q, p.max_receive, q.max_send}), 0.0),
        bridge.capacity_qp);
    t.qp_second = std::max(std::min(std::max(q.outside_band, -p.max_send), 0.0),
                           -bridge.capacity_pq);
    t.pq = t.pq_first + t.pq_second;
    t.qp = t.qp_first + t.qp_second;
    return t;
}

PipelineResult run_pipeline(const PipelineInput& input) {
    validate_scenario(input.p, input.q, input.bridge);
    if (input.delta <= 0.0) {
        fail(errc::invalid_argument, "delta must be positive");
    }
    if (input.max_stretch < 0.0) {
        fail(errc::invalid_argument, "max_stretch < 0");
    }

    PipelineResult r;
    NetworkFlowEstimate ep{input.p.tbd, input.p.current_total};
    NetworkFlowEstimate eq{input.q.tbd, input.q.current_total};
    r.stretch = make_stretch_result(ep, eq, input.bridge.capacity_pq, input.max_stretch);

    r.total_with_tbd_p = input.p.total_with_tbd();
    r.total_with_tbd_q = input.q.total_with_tbd();
    r.total_with_tbd_pq = r.total_with_tbd_p + r.total_with_tbd_q;

    std::vector<AssetWeightBand> bands_p;
    std::vector<AssetWeightBand> bands_q;
    bands_p.reserve(input.assets.size());
    bands_q.reserve(input.assets.size());
    r.allocations.reserve(input.assets.size());

    for (const auto& asset : input.assets) {
        AssetAllocation alloc;
        alloc.id = asset.id;
        alloc.on_p = asset.on_p;
        alloc.on_q = asset.on_q;

        AssetWeightBand stretched = stretch_band(asset.band, r.stretch.capped_stretch);

        if (asset.on_p && asset.on_q) {
            alloc.share_untrimmed =
                network_weight(true, true, r.total_with_tbd_p, r.total_with_tbd_q);
            auto [wp, wq] = trim_network_weight(alloc.share_untrimmed, input.trim);
            alloc.share_p = wp;
            alloc.share_q = wq;
        } else if (asset.on_p) {
            // Single-network assets keep their full weight on the home network.
            alloc.share_untrimmed = 1.0;
            alloc.share_p = 1.0;
            alloc.share_q = 0.0;
        } else if (asset.on_q) {
            alloc.share_untrimmed = 0.0;
            alloc.share_p = 0.0;
            alloc.share_q = 1.0;
        } else {
            fail(errc::undefined_share, "asset " + asset.id + " available on neither network");
        }

        alloc.band_p = network_band(stretched, alloc.share_p);
        alloc.band_q = network_band(stretched, alloc.share_q);
        bands_p.push_back(alloc.band_p);
        bands_q.push_back(alloc.band_q);
        r.allocations.push_back(std::move(alloc));
    }

    r.capacity_p = network_capacity(r.total_with_tbd_pq, bands_p);
    r.capacity_q = network_capacity(r.total_with_tbd_pq, bands_q);
    r.assess_p = assess_band(r.total_with_tbd_p, r.capacity_p);
    r.assess_q = assess_band(r.total_with_tbd_q, r.capacity_q);

    SimpleTransfer simple = transfer_simple(r.assess_p, r.assess_q, input.bridge);
    DeltaTransfer delta = transfer_delta(r.assess_p, r.assess_q, input.bridge, input.delta);

    r.decision.simple_pq = simple.pq;
    r.decision.simple_qp = simple.qp;
    r.decision.delta_pq = delta.pq;
    r.decision.delta_qp = delta.qp;

    r.terms.pq_first_delta = delta.pq_first;
    r.terms.pq_first_simple = simple.pq_first;
    r.terms.pq_second = delta.pq_second;
    r.terms.qp_first_delta = delta.qp_first;
    r.terms.qp_first_simple = simple.qp_first;
    r.terms.qp_second = delta.qp_second;

    r.outside_compare_pq = delta.compare_pq;
    r.outside_compare_qp = delta.compare_qp;
    r.indicator_p = delta.indicator_p;
    r.indicator_q = delta.indicator_q;

    r.netted = std::clamp(simple.pq - simple.qp, -input.bridge.capacity_qp,
                          input.bridge.capacity_pq);

    double residual_p =
        std::max(-r.assess_p.outside_band - std::max(delta.qp, 0.0), 0.0);
    double residual_q =
        std::max(-r.assess_q.outside_band - std::max(delta.pq, 0.0), 0.0);
    r.multi_round = residual_p > amount_tolerance(r.assess_p.outside_band) ||
                    residual_q > amount_tolerance(r.assess_q.outside_band);

    double min_total = r.capacity_p.min_capacity + r.capacity_q.min_capacity;
    double max_total = r.capacity_p.max_capacity + r.capacity_q.max_capacity;
    r.bands_infeasible = min_total > r.total_with_tbd_pq + amount_tolerance(r.total_with_tbd_pq) ||
                         max_total < r.total_with_tbd_pq - amount_tolerance(r.total_with_tbd_pq);

    return r;
}

}  // namespace bridgeflow
